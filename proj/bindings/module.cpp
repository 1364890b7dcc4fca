#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conelim/errors.hpp"
#include "conelim/report.hpp"
#include "conelim/testkit.hpp"

namespace py = pybind11;
using namespace conelim;

namespace {

py::object json_to_py(const io::json& j) {
    switch (j.type()) {
        case io::json::value_t::null: return py::none();
        case io::json::value_t::boolean: return py::bool_(j.get<bool>());
        case io::json::value_t::number_integer: return py::int_(j.get<long long>());
        case io::json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case io::json::value_t::number_float: return py::float_(j.get<double>());
        case io::json::value_t::string: return py::str(j.get<std::string>());
        case io::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case io::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

HitchinPair pair_from_text(const std::string& instance_json) {
    return io::parse_instance_text(instance_json);
}

testkit::Shape shape_from_name(const std::string& name) {
    if (name == "zero") return testkit::Shape::Zero;
    if (name == "regular") return testkit::Shape::Regular;
    if (name == "intermediate") return testkit::Shape::Rank3Intermediate;
    if (name == "any") return testkit::Shape::Any;
    throw std::invalid_argument("unknown shape '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact nilpotent-cone limit computations on the split model curve";

    static py::exception<ParseError> parse_error(m, "InstanceParseError");
    static py::exception<ContractError> contract_error(m, "ContractViolation");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            parse_error(e.what());
        } catch (const ContractError& e) {
            contract_error((e.code() + ": " + e.what()).c_str());
        }
    });

    m.def(
        "validate",
        [](const std::string& instance_json) {
            HitchinPair pair = pair_from_text(instance_json);
            validate(pair);
            return json_to_py({{"valid", true},
                               {"rank", pair.rank()},
                               {"degree", pair.degree()}});
        },
        py::arg("instance_json"), "Check the degree law; raises on violations.");

    m.def(
        "analyze",
        [](const std::string& instance_json) {
            return json_to_py(io::report_to_json(io::analyze(pair_from_text(instance_json))));
        },
        py::arg("instance_json"),
        "Full report: characteristic coefficients, nilpotency, stability, "
        "classification, limit and flow verification.");

    m.def(
        "analyze_json",
        [](const std::string& instance_json) {
            return io::report_to_json(io::analyze(pair_from_text(instance_json))).dump(2);
        },
        py::arg("instance_json"), "Same as analyze, rendered as a JSON string.");

    m.def(
        "stability",
        [](const std::string& instance_json) {
            HitchinPair pair = pair_from_text(instance_json);
            nilpotency_order(pair);
            return json_to_py(io::verdict_to_json(is_stable(pair)));
        },
        py::arg("instance_json"));

    m.def(
        "random_instance",
        [](std::uint64_t seed, int rank, const std::string& shape, bool stable, int twist_min,
           int twist_max, int l_min, int l_max, int max_attempts) {
            testkit::GenParams params{seed,  rank,  twist_min,
                                      twist_max, l_min, l_max,
                                      shape_from_name(shape), stable, max_attempts};
            return io::emit_instance(testkit::random_pair(params)).dump(2);
        },
        py::arg("seed"), py::arg("rank") = 3, py::arg("shape") = "any",
        py::arg("stable") = false, py::arg("twist_min") = -3, py::arg("twist_max") = 3,
        py::arg("l_min") = 1, py::arg("l_max") = 3, py::arg("max_attempts") = 500,
        "Deterministic random instance as a JSON string.");

    m.def(
        "nilpotency_oracle",
        [](const std::string& instance_json, int samples) {
            return testkit::pointwise_nilpotency_oracle(pair_from_text(instance_json), samples);
        },
        py::arg("instance_json"), py::arg("samples") = 16);

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
