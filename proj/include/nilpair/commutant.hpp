#pragma once

#include <cstddef>
#include <vector>

#include "nilpair/matrix.hpp"

namespace nilpair {

/// Arm length of the (i, j) entry (1-based) of a rows × cols matrix:
/// j − i when rows ≥ cols, and j − i − (cols − rows) otherwise.
long arm_length(std::size_t i, std::size_t j, std::size_t rows, std::size_t cols);

/// True iff entries of equal arm length are equal and entries of
/// negative arm length are zero.
bool is_ta_matrix(const DenseMatrix& m);

/// Membership test for the commutant of A = J_{λ1} ⊕ ... ⊕ J_{λs}:
/// every λ_i × λ_j block of B must be a TA-matrix. A must be exactly
/// the Jordan matrix of λ (PreconditionError otherwise).
bool commutant_check(const DenseMatrix& a, const DenseMatrix& b, const JordanType& lambda);

/// The 2×(m+n) compressed form of an element of the commutant of
/// J_m ⊕ J_n with m > n ≥ 1: row 1 carries (a_0..a_{m-1} | b_0..b_{n-1})
/// and row m+1 carries (0..0 c_0..c_{n-1} | d_0..d_{n-1}). The element
/// is nilpotent iff a_0 = 0 and d_0 = 0.
struct ShortForm {
    std::size_t m;
    std::size_t n;
    std::vector<Scalar> a; // length m
    std::vector<Scalar> b; // length n
    std::vector<Scalar> c; // length n
    std::vector<Scalar> d; // length n

    ShortForm(std::size_t m, std::size_t n, std::vector<Scalar> a, std::vector<Scalar> b,
              std::vector<Scalar> c, std::vector<Scalar> d);

    static ShortForm zero(const FieldSpec& spec, std::size_t m, std::size_t n);

    const FieldSpec& field() const { return a.front().field(); }

    bool operator==(const ShortForm& other) const;
    bool operator!=(const ShortForm& other) const { return !(*this == other); }

    std::string str() const;
};

bool is_nilpotent_short(const ShortForm& sf);

/// Compressed form of a stabilizer element of J_m ⊕ J_n (rows x, y,
/// z, w in the same two-row layout); x_0 ≠ 0 and w_0 ≠ 0 are
/// construction invariants.
struct StabShort {
    std::size_t m;
    std::size_t n;
    std::vector<Scalar> x; // length m, x_0 ≠ 0
    std::vector<Scalar> y; // length n
    std::vector<Scalar> z; // length n
    std::vector<Scalar> w; // length n, w_0 ≠ 0

    StabShort(std::size_t m, std::size_t n, std::vector<Scalar> x, std::vector<Scalar> y,
              std::vector<Scalar> z, std::vector<Scalar> w);

    static StabShort identity(const FieldSpec& spec, std::size_t m, std::size_t n);

    const FieldSpec& field() const { return x.front().field(); }
};

/// The unique (m+n)×(m+n) TA-block matrix with the given row data;
/// commutes with J_m ⊕ J_n by construction.
DenseMatrix expand(const ShortForm& sf);

/// Inverse of expand: reads rows 1 and m+1. Throws NotInCommutantError
/// if b does not commute with J_m ⊕ J_n (i.e. is not of the TA shape).
ShortForm compress(const DenseMatrix& b, std::size_t m, std::size_t n);

/// Expansion of a stabilizer element; always invertible.
DenseMatrix stab_expand(const StabShort& xs);

/// The group action: compress(X⁻¹ · expand(sf) · X) for X = stab_expand(xs).
ShortForm apply_stab(const StabShort& xs, const ShortForm& sf);

/// Stabilizer composition via matrix product: stab_expand(compose(s, t))
/// = stab_expand(s) · stab_expand(t).
StabShort stab_compose(const StabShort& s, const StabShort& t);

namespace detail {

// Which parameter row (0 = a/x, 1 = b/y, 2 = c/z, 3 = d/w) and index
// the (i, j) entry of a two-block commutant element reads; row -1
// marks structural zeros.
struct EntrySource {
    int row;
    std::size_t index;
};

EntrySource entry_source(std::size_t i, std::size_t j, std::size_t m, std::size_t n);

} // namespace detail

} // namespace nilpair
