#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "lindq/caps.hpp"

namespace lindq::gf {

/// Index of a field element in [0, q). 0 is the additive identity, 1 the
/// multiplicative one. For prime-power q the index is the base-p encoding of
/// the polynomial representative, constant term least significant.
using Element = std::uint8_t;

using Vector = Eigen::Matrix<Element, Eigen::Dynamic, 1>;
using Matrix = Eigen::Matrix<Element, Eigen::Dynamic, Eigen::Dynamic>;

/// F_q for a prime power q <= Caps::field_max_q, with table arithmetic.
///
/// Prime fields are the integers mod p. Extension fields reduce modulo the
/// smallest monic irreducible polynomial of the required degree, polynomials
/// compared as base-p integers with the leading non-monic coefficient most
/// significant. The primitive element is the multiplicative generator with
/// the smallest index. Immutable once built.
class FiniteField {
public:
    static constexpr int max_order = 16;

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return degree_; }

    /// Reduction polynomial, low-order coefficient first, monic. {0, 1}
    /// (i.e. x) for prime fields.
    const std::vector<int>& modulus() const { return modulus_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element primitive_element() const { return primitive_; }

    Element add(Element a, Element b) const { return add_[a * q_ + b]; }
    Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
    Element neg(Element a) const { return neg_[a]; }
    Element sub(Element a, Element b) const { return add(a, neg(b)); }
    /// Multiplicative inverse; a must be nonzero.
    Element inv(Element a) const { return inv_[a]; }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, long long e) const;

    /// Multiplicative order of a nonzero element.
    int order(Element a) const;

    friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.q_ == b.q_; }

private:
    friend FiniteField make_field(int q, const Caps& caps);

    int q_ = 0;
    int p_ = 0;
    int degree_ = 0;
    std::vector<int> modulus_;
    Element primitive_ = 0;
    std::array<Element, max_order * max_order> add_{};
    std::array<Element, max_order * max_order> mul_{};
    std::array<Element, max_order> neg_{};
    std::array<Element, max_order> inv_{};
};

/// Throws NotAPrimePower for q < 2, composite non-prime-powers, and q above
/// the configured cap.
FiniteField make_field(int q, const Caps& caps = default_caps());

/// True when q is a prime power in [2, cap].
bool is_supported_order(int q, const Caps& caps = default_caps());

// --- vectors ---------------------------------------------------------------

Vector unit(int k, int i);

Element inner(const FiniteField& f, const Vector& v, const Vector& w);
Vector add(const FiniteField& f, const Vector& v, const Vector& w);
Vector scale(const FiniteField& f, Element lambda, const Vector& v);

bool is_zero(const Vector& v);
/// Nonzero with first nonzero coordinate equal to one.
bool is_normal(const Vector& v);
/// The unique normal scalar multiple of a. Throws ZeroVector.
Vector normalize(const FiniteField& f, const Vector& a);

/// Coordinate-wise lexicographic order on element indices.
bool lex_less(const Vector& a, const Vector& b);

/// All (q^k - 1)/(q - 1) normal vectors of F_q^k in lexicographic order.
std::vector<Vector> enumerate_normal_vectors(const FiniteField& f, int k);

/// All q^k vectors of F_q^k in lexicographic order.
std::vector<Vector> enumerate_vectors(const FiniteField& f, int k);

/// Position of a normal vector within enumerate_normal_vectors(f, k).
std::size_t normal_index(const FiniteField& f, const Vector& a);

// --- matrices --------------------------------------------------------------

Matrix multiply(const FiniteField& f, const Matrix& a, const Matrix& b);
Vector multiply(const FiniteField& f, const Matrix& a, const Vector& x);

/// Reduced row echelon form in place; returns pivot columns in order.
std::vector<int> reduce_row_echelon(const FiniteField& f, Matrix& a);

int rank(const FiniteField& f, Matrix a);
Element determinant(const FiniteField& f, Matrix a);

/// Throws Singular when a is not square of full rank.
Matrix invert(const FiniteField& f, const Matrix& a);

/// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const FiniteField& f, const Matrix& a, const Vector& b);

/// Basis of {x : a x = 0} as columns, one per free column of the reduced
/// echelon form, in increasing free-column order.
Matrix nullspace(const FiniteField& f, const Matrix& a);

}  // namespace lindq::gf
