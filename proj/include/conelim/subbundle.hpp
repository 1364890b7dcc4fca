#pragma once

#include <vector>

#include "conelim/twisted.hpp"

namespace conelim {

// Saturated (or not-yet-saturated) basis of a subbundle of a split bundle.
// Rows of `basis` carry the ambient twists, columns the subbundle twists.
// `saturated` means the gcd of all maximal minors is a nonzero constant, so
// the columns embed a subbundle with locally free quotient.
struct SubbundleBasis {
    TwistedMatrix basis;
    bool saturated = false;

    std::size_t rank() const { return basis.cols(); }
    const std::vector<int>& ambient_twists() const { return basis.row_twists(); }
    const std::vector<int>& twists() const { return basis.col_twists(); }
};

// Zero subbundle (no columns) of the given ambient profile.
SubbundleBasis zero_subbundle(const std::vector<int>& ambient_twists);
SubbundleBasis full_subbundle(const std::vector<int>& ambient_twists);

// Saturated basis of the kernel subbundle of M. Kernel modules of maps of
// free graded modules are torsion-closed, so the output needs no extra
// saturation pass; generators are found degree by degree and are canonical.
SubbundleBasis kernel_basis(const TwistedMatrix& M);

// Saturation of the column span of B (full column rank required). Computed
// as the kernel of the rank-one-higher minor conditions of B, which cuts out
// exactly the rational column span inside the ambient module.
SubbundleBasis saturate(const TwistedMatrix& B);

// Saturation of the column span of M allowing dependent columns: a maximal
// independent column subset spans the same rational subspace.
SubbundleBasis saturate_span(const TwistedMatrix& M);

// Canonical minimal generator basis of the module generated by B's columns.
TwistedMatrix minimal_basis(const TwistedMatrix& B);

// Line-bundle degrees of the subbundle summands, descending.
std::vector<int> splitting_type(const SubbundleBasis& B);
int subbundle_degree(const SubbundleBasis& B);

// The maximal-degree line subbundle (first column of the canonical minimal
// basis).
SubbundleBasis max_line_subbundle(const SubbundleBasis& B);

// Unique C with A = B.basis * C; NotFactorable when the span condition or
// exactness fails.
TwistedMatrix factor_through(const TwistedMatrix& A, const SubbundleBasis& B);

// Presentation of the quotient of a free twisted module by the saturated
// column span of C: a surjection pi (onto a split bundle with descending
// twists) with pi * C = 0 and full rank. C's saturation is required for the
// presented twists to be the quotient's splitting type.
TwistedMatrix quotient_presentation(const TwistedMatrix& C);

// Unique X with X * pi = kappa, for pi a full-row-rank presentation.
TwistedMatrix factor_over_quotient(const TwistedMatrix& kappa, const TwistedMatrix& pi);

// Same rational column span (mutual factorization through saturations).
bool same_span(const SubbundleBasis& A, const SubbundleBasis& B);

// Degree-m global sections of the subsheaf generated by the columns of B
// (for saturated B this is h^0 of the subbundle twisted by m).
int span_slice_dimension(const TwistedMatrix& B, int m);

}  // namespace conelim
