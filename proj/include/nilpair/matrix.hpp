#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nilpair/field.hpp"

namespace nilpair {

/// Jordan type of a nilpotent matrix: the non-increasing partition of
/// block sizes.
class JordanType {
public:
    explicit JordanType(std::vector<std::size_t> parts);

    const std::vector<std::size_t>& parts() const { return parts_; }
    std::size_t order() const; // sum of the parts

    bool operator==(const JordanType& other) const = default;

    std::string str() const; // e.g. "[6,4]"

private:
    std::vector<std::size_t> parts_;
};

/// Dense matrix over an exact field. Immutable in spirit: all
/// operations return fresh matrices; set() exists only for building.
class DenseMatrix {
public:
    DenseMatrix(const FieldSpec& spec, std::size_t rows, std::size_t cols); // zero matrix

    static DenseMatrix identity(const FieldSpec& spec, std::size_t n);
    static DenseMatrix jordan_block(const FieldSpec& spec, std::size_t k);
    // J_{λ1} ⊕ ... ⊕ J_{λs}
    static DenseMatrix jordan_matrix(const FieldSpec& spec, const JordanType& type);

    const FieldSpec& field() const { return spec_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Scalar& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& v);

    DenseMatrix operator*(const DenseMatrix& rhs) const;
    DenseMatrix operator+(const DenseMatrix& rhs) const;
    DenseMatrix operator-(const DenseMatrix& rhs) const;
    bool operator==(const DenseMatrix& rhs) const;
    bool operator!=(const DenseMatrix& rhs) const { return !(*this == rhs); }

    DenseMatrix pow(std::size_t k) const;

    bool is_zero() const;
    bool is_identity() const;

    // Exact rank: fraction-free (Bareiss) elimination over Q, plain
    // Gauss-Jordan over GF(p).
    std::size_t rank() const;

    // Throws SingularMatrixError for singular input, ShapeError for
    // non-square input.
    DenseMatrix inverse() const;

    std::string str() const; // for diagnostics

private:
    void require_same_shape(const DenseMatrix& rhs) const;
    void require_same_field(const DenseMatrix& rhs) const;

    FieldSpec spec_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_; // row-major
};

/// Partition of Jordan block sizes of a nilpotent matrix; throws
/// NotNilpotentError otherwise.
JordanType jordan_type(const DenseMatrix& a);

/// Invertible P with P⁻¹ A P = J_{λ1} ⊕ ... ⊕ J_{λs}, blocks in
/// non-increasing size order. The result is self-checked exactly.
DenseMatrix jordan_basis(const DenseMatrix& a);

/// X⁻¹ B X.
DenseMatrix conjugate(const DenseMatrix& x, const DenseMatrix& b);

/// Columns form a basis of ker(a). Deterministic (RREF free columns).
DenseMatrix nullspace(const DenseMatrix& a);

} // namespace nilpair
