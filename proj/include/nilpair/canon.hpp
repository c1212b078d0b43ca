#pragma once

#include <optional>

#include "nilpair/commutant.hpp"

namespace nilpair {

enum class CanonFormTag { TypeB, TypeBPrime, Decomposable };

std::string to_string(CanonFormTag tag);

/// Outcome of canonicalizing a commuting nilpotent pair. For
/// indecomposable input, `canonical` is the canonical short form and
/// `witness` an invertible matrix commuting with J_m ⊕ J_n such that
/// witness⁻¹ · expand(input) · witness = expand(canonical) exactly.
/// `jordanizer` is the basis change P that brought A to J_m ⊕ J_n
/// (identity when A already was). Decomposable results carry neither
/// canonical form nor witness.
struct CanonResult {
    std::size_t rank;
    CanonFormTag form;
    std::optional<ShortForm> canonical;
    std::optional<DenseMatrix> witness;
    DenseMatrix jordanizer;
};

/// Smallest k with (b_k, c_k) ≠ (0, 0); absent when b = c = 0.
/// Requires a nilpotent short form.
std::optional<std::size_t> leading_pair_index(const ShortForm& sf);

/// One round of the progressive reduction: conjugates by stabilizers
/// that zero the current leading pair (strictly increasing its index,
/// or emptying b and c). Requires a leading pair k and a mismatch
/// d_i ≠ a_i at some 1 ≤ i ≤ k; throws PreconditionError otherwise.
ShortForm try_eliminate(const ShortForm& sf);

/// Canonical rank: 0 if the reduction loop empties b and c
/// (decomposable), else n − k for the stabilized leading index k.
std::size_t canonical_rank(const ShortForm& sf);

/// Full canonicalization of a nilpotent commutant element of
/// J_m ⊕ J_n: runs the reduction loop, then the explicit canonicalizing
/// conjugation for the branch at hand. Every result is self-checked
/// (template shape and exact witness conjugation) before returning.
CanonResult canonical_form(const ShortForm& sf);

/// Closed-form canonicalization for m = 6, n = 4, by direct
/// substitution into the per-rank formulas; independent of the
/// conjugation path in canonical_form. Input must already be in
/// reduced shape.
ShortForm closed_form_m6n4(const ShortForm& sf);

/// Canonicalize a pair (A, B) of commuting nilpotent matrices where A
/// has Jordan type [m, n] with m > n: Jordan-normalizes A, compresses
/// B, and classifies. Pairs outside the two-distinct-blocks case are
/// rejected with PreconditionError.
CanonResult canonicalize_pair(const DenseMatrix& a, const DenseMatrix& b);

/// Similarity test for two indecomposable pairs: present iff their
/// canonical short forms coincide; the returned Y satisfies
/// Y⁻¹ A₁ Y = A₂ and Y⁻¹ B₁ Y = B₂ exactly.
std::optional<DenseMatrix> pairs_similar(const DenseMatrix& a1, const DenseMatrix& b1,
                                         const DenseMatrix& a2, const DenseMatrix& b2);

/// True iff sf matches the B_{m,n,r} (TypeB) or B'_{m,n,r}
/// (TypeBPrime) template for the given rank.
bool matches_canonical_template(const ShortForm& sf, std::size_t r, CanonFormTag tag);

/// Which template, if any, a short form matches.
std::optional<std::pair<std::size_t, CanonFormTag>> canonical_template_info(const ShortForm& sf);

} // namespace nilpair
