#include "conelim/report.hpp"

#include <numeric>
#include <sstream>

#include "conelim/errors.hpp"

namespace conelim::io {

namespace {

int require_int(const json& doc, const std::string& key) {
    if (!doc.contains(key) || !doc[key].is_number_integer())
        throw ParseError("missing or non-integer key '" + key + "'");
    return doc[key].get<int>();
}

}  // namespace

json form_to_json(const BinaryForm& f) {
    if (f.is_zero()) return nullptr;
    json arr = json::array();
    for (const auto& c : f.coeffs()) arr.push_back(to_string(c));
    return arr;
}

BinaryForm form_from_json(const json& cell, int expected_degree, const std::string& where) {
    if (cell.is_null()) return {};
    if (!cell.is_array()) throw ParseError(where + ": cell must be null or an array");
    if (expected_degree >= 0 &&
        static_cast<int>(cell.size()) != expected_degree + 1)
        throw ParseError(where + ": expected " + std::to_string(expected_degree + 1) +
                         " coefficients, found " + std::to_string(cell.size()));
    if (cell.empty()) return {};
    std::vector<Rational> coeffs;
    coeffs.reserve(cell.size());
    for (const auto& entry : cell) {
        if (!entry.is_string()) throw ParseError(where + ": coefficients must be strings");
        coeffs.push_back(parse_rational(entry.get<std::string>()));
    }
    return BinaryForm(static_cast<int>(cell.size()) - 1, std::move(coeffs));
}

HitchinPair parse_instance(const json& doc) {
    if (!doc.is_object()) throw ParseError("instance must be a JSON object");
    int rank = require_int(doc, "rank");
    int l_degree = require_int(doc, "l_degree");
    if (!doc.contains("twists") || !doc["twists"].is_array())
        throw ParseError("missing 'twists' array");
    std::vector<int> twists;
    for (const auto& t : doc["twists"]) {
        if (!t.is_number_integer()) throw ParseError("twists must be integers");
        twists.push_back(t.get<int>());
    }
    if (static_cast<int>(twists.size()) != rank)
        throw ParseError("rank is " + std::to_string(rank) + " but " +
                         std::to_string(twists.size()) + " twists were given");
    for (std::size_t i = 0; i + 1 < twists.size(); ++i)
        if (twists[i] < twists[i + 1]) throw ParseError("twists must be descending");
    if (!doc.contains("higgs") || !doc["higgs"].is_array() ||
        static_cast<int>(doc["higgs"].size()) != rank)
        throw ParseError("'higgs' must be a rank x rank array");
    std::vector<std::vector<BinaryForm>> grid(rank, std::vector<BinaryForm>(rank));
    for (int i = 0; i < rank; ++i) {
        const json& row = doc["higgs"][i];
        if (!row.is_array() || static_cast<int>(row.size()) != rank)
            throw ParseError("higgs row " + std::to_string(i + 1) + " has wrong length");
        for (int j = 0; j < rank; ++j) {
            int expected = twists[i] + l_degree - twists[j];
            std::string where = "higgs cell (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")";
            grid[i][j] = form_from_json(row[j], expected, where);
        }
    }
    return HitchinPair::create(BundleModel(std::move(twists)), l_degree, grid);
}

HitchinPair parse_instance_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_instance(doc);
}

json emit_instance(const HitchinPair& pair) {
    json doc;
    doc["rank"] = pair.rank();
    doc["twists"] = pair.bundle().twists;
    doc["l_degree"] = pair.l_degree();
    json rows = json::array();
    for (int i = 0; i < pair.rank(); ++i) {
        json row = json::array();
        for (int j = 0; j < pair.rank(); ++j) row.push_back(form_to_json(pair.higgs().at(i, j)));
        rows.push_back(std::move(row));
    }
    doc["higgs"] = std::move(rows);
    return doc;
}

json matrix_to_json(const TwistedMatrix& m) {
    json doc;
    doc["row_twists"] = m.row_twists();
    doc["col_twists"] = m.col_twists();
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(form_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);
    return doc;
}

Analysis analyze(const HitchinPair& pair) {
    Analysis a{pair, hitchin_map(pair), false, {}, {}, {}, {}, {}, {}, {}};
    try {
        a.order = nilpotency_order(pair);
        a.nilpotent = true;
    } catch (const NotNilpotent&) {
        a.nilpotent = false;
        return a;
    }
    try {
        a.verdict = is_stable(pair);
    } catch (const Unsupported&) {
        a.verdict.reset();
    }
    a.classification = classify(pair);
    if (a.classification->kind == LimitCase::Unsupported) return a;
    if (a.classification->kind == LimitCase::IntermediateC1 ||
        a.classification->kind == LimitCase::IntermediateC2)
        a.constraints = check_slope_constraints(pair);
    a.limit = limit(pair);

    Filtration filt = (a.classification->kind == LimitCase::IntermediateC1 ||
                       a.classification->kind == LimitCase::IntermediateC2)
                          ? rank3_filtration(pair)
                          : kernel_filtration(pair);
    flow::AdaptedFrame frame = flow::adapted_frame(pair, filt);
    a.block_sizes = frame.block_sizes;
    a.flow_report = flow::flow_limit(flow::conjugate_flow(pair, frame), *a.limit);
    return a;
}

json verdict_to_json(const StabilityVerdict& v) {
    json checks = json::array();
    for (const auto& c : v.checks) {
        json item;
        item["description"] = c.description;
        item["degree"] = c.degree;
        item["rank"] = c.rank;
        item["slope"] = to_string(c.subbundle_slope);
        item["bound"] = to_string(c.bound);
        item["ok"] = c.ok;
        checks.push_back(std::move(item));
    }
    return checks;
}

json constraints_to_json(const ConstraintReport& c) {
    json doc;
    doc["slope_window"] = {{"lower", to_string(c.slope_window.lower)},
                           {"value", to_string(c.slope_window.value)},
                           {"upper", to_string(c.slope_window.upper)},
                           {"ok", c.slope_window.ok}};
    doc["image_line_slope"] = {{"lhs", to_string(c.image_line_slope.lhs)},
                               {"rhs", to_string(c.image_line_slope.rhs)},
                               {"ok", c.image_line_slope.ok}};
    doc["kernel_slope"] = {{"lhs", to_string(c.kernel_slope.lhs)},
                           {"rhs", to_string(c.kernel_slope.rhs)},
                           {"ok", c.kernel_slope.ok}};
    doc["induced_map_degree"] = {{"lhs", to_string(c.induced_map_degree.lhs)},
                                 {"rhs", to_string(c.induced_map_degree.rhs)},
                                 {"ok", c.induced_map_degree.ok}};
    return doc;
}

json flow_to_json(const flow::FlowReport& r, const std::vector<int>& block_sizes) {
    json table = json::array();
    for (const auto& row : r.exponent_table) {
        json jrow = json::array();
        for (const auto& e : row)
            jrow.push_back(e ? json(*e) : json(nullptr));
        table.push_back(std::move(jrow));
    }
    json doc;
    doc["block_sizes"] = block_sizes;
    doc["exponent_table"] = std::move(table);
    doc["matches_prediction"] = r.matches_prediction;
    return doc;
}

json limit_to_json(const HodgeBundle& h) {
    json doc;
    doc["type_vector"] = h.type_vector;
    doc["piece_twists"] = h.piece_twists;
    json maps = json::array();
    for (const auto& m : h.maps) maps.push_back(matrix_to_json(m));
    doc["maps"] = std::move(maps);
    return doc;
}

json report_to_json(const Analysis& a) {
    json doc;
    doc["valid"] = true;
    json image = json::array();
    for (const auto& f : a.image.coefficients) image.push_back(form_to_json(f));
    doc["hitchin_image"] = std::move(image);
    doc["nilpotent"] = a.nilpotent;
    doc["nilpotency_order"] = a.order ? json(*a.order) : json(nullptr);
    doc["coprime"] = std::gcd(a.pair.rank(), a.pair.degree()) == 1;
    doc["stable"] = a.verdict ? json(a.verdict->stable) : json(nullptr);
    doc["semistable"] = a.verdict ? json(a.verdict->semistable) : json(nullptr);
    doc["stability_checks"] = a.verdict ? verdict_to_json(*a.verdict) : json(nullptr);
    doc["classification"] =
        a.classification ? json(to_string(a.classification->kind)) : json(nullptr);
    json slopes;
    slopes["mu_E"] = to_string(pair_slope(a.pair));
    auto opt_slope = [](const std::optional<Rational>& v) {
        return v ? json(to_string(*v)) : json(nullptr);
    };
    slopes["mu_E2"] = a.classification ? opt_slope(a.classification->slopes.mu_kernel) : json(nullptr);
    slopes["mu_E3"] = a.classification ? opt_slope(a.classification->slopes.mu_image) : json(nullptr);
    slopes["mu_mixed"] = a.classification ? opt_slope(a.classification->slopes.mu_mixed) : json(nullptr);
    doc["slopes"] = std::move(slopes);
    doc["constraints"] = a.constraints ? constraints_to_json(*a.constraints) : json(nullptr);
    doc["limit"] = a.limit ? limit_to_json(*a.limit) : json(nullptr);
    doc["flow"] = a.flow_report ? flow_to_json(*a.flow_report, *a.block_sizes) : json(nullptr);
    return doc;
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
    return s + std::string(s.size() < width ? width - s.size() : 1, ' ');
}

}  // namespace

std::string render_text_report(const Analysis& a) {
    std::ostringstream os;
    const std::size_t w = 22;
    os << pad("rank", w) << a.pair.rank() << "\n";
    os << pad("degree", w) << a.pair.degree() << "\n";
    os << pad("l_degree", w) << a.pair.l_degree() << "\n";
    os << pad("nilpotent", w) << (a.nilpotent ? "yes" : "no") << "\n";
    if (a.order) os << pad("nilpotency_order", w) << *a.order << "\n";
    if (a.verdict) {
        os << pad("stable", w) << (a.verdict->stable ? "yes" : "no") << "\n";
        for (const auto& c : a.verdict->checks)
            os << pad("  check", w) << c.description << ": slope " << to_string(c.subbundle_slope)
               << (c.ok ? " < " : " !< ") << to_string(c.bound) << "\n";
    }
    if (a.classification)
        os << pad("classification", w) << to_string(a.classification->kind) << "\n";
    if (a.constraints) {
        const auto& c = *a.constraints;
        os << pad("slope_window", w) << to_string(c.slope_window.lower) << " < "
           << to_string(c.slope_window.value) << " < " << to_string(c.slope_window.upper)
           << (c.slope_window.ok ? "  (holds)" : "  (fails)") << "\n";
        auto cmp = [&](const char* name, const SlopeComparison& s, const char* op) {
            os << pad(name, w) << to_string(s.lhs) << " " << op << " " << to_string(s.rhs)
               << (s.ok ? "  (holds)" : "  (fails)") << "\n";
        };
        cmp("image_line_slope", c.image_line_slope, "<");
        cmp("kernel_slope", c.kernel_slope, "<");
        cmp("induced_map_degree", c.induced_map_degree, ">=");
    }
    if (a.limit) {
        os << pad("limit type", w);
        for (std::size_t i = 0; i < a.limit->type_vector.size(); ++i)
            os << (i ? "," : "(") << a.limit->type_vector[i];
        os << ")\n";
        for (std::size_t j = 0; j < a.limit->piece_twists.size(); ++j) {
            os << pad("  piece " + std::to_string(j + 1), w);
            for (std::size_t k = 0; k < a.limit->piece_twists[j].size(); ++k)
                os << (k ? "," : "{") << a.limit->piece_twists[j][k];
            os << "}\n";
        }
        for (std::size_t j = 0; j < a.limit->maps.size(); ++j)
            os << pad("  map " + std::to_string(j + 1), w)
               << a.limit->maps[j].str();
    }
    if (a.flow_report)
        os << pad("flow matches", w) << (a.flow_report->matches_prediction ? "yes" : "no")
           << "\n";
    return os.str();
}

}  // namespace conelim::io
