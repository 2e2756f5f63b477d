#include "lindq/gf.hpp"

#include <algorithm>
#include <string>

#include "lindq/errors.hpp"

namespace lindq::gf {

namespace {

// Polynomials over F_p as coefficient vectors, low order first.
using Poly = std::vector<int>;

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p)
{
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    const int lead_inv = [&] {
        for (int x = 1; x < p; ++x)
            if (x * m.back() % p == 1)
                return x;
        return 1;
    }();
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int shift = static_cast<int>(a.size()) - 1 - dm;
        const int c = a.back() * lead_inv % p;
        for (int i = 0; i <= dm; ++i)
            a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

Poly from_index(int value, int p, int len)
{
    Poly a(len);
    for (int i = 0; i < len; ++i) {
        a[i] = value % p;
        value /= p;
    }
    return a;
}

bool is_irreducible(const Poly& f, int p)
{
    const int d = static_cast<int>(f.size()) - 1;
    for (int dd = 1; 2 * dd <= d; ++dd) {
        int count = 1;
        for (int i = 0; i < dd; ++i)
            count *= p;
        for (int c = 0; c < count; ++c) {
            Poly g = from_index(c, p, dd);
            g.push_back(1);
            if (poly_mod(f, g, p).empty())
                return false;
        }
    }
    return true;
}

// Smallest monic irreducible of degree d, comparing the non-leading
// coefficients as a base-p integer.
Poly smallest_irreducible(int p, int d)
{
    int count = 1;
    for (int i = 0; i < d; ++i)
        count *= p;
    for (int c = 0; c < count; ++c) {
        Poly f = from_index(c, p, d);
        f.push_back(1);
        if (is_irreducible(f, p))
            return f;
    }
    throw Error("no irreducible polynomial found");
}

// (p, degree) when q is a prime power, else nullopt.
std::optional<std::pair<int, int>> prime_power(int q)
{
    if (q < 2)
        return std::nullopt;
    int p = 2;
    while (q % p)
        ++p;
    int d = 0;
    int r = q;
    while (r % p == 0) {
        r /= p;
        ++d;
    }
    if (r != 1)
        return std::nullopt;
    return std::make_pair(p, d);
}

void require_same_length(const Vector& v, const Vector& w)
{
    if (v.size() != w.size())
        throw DimensionMismatch("vector lengths differ: " + std::to_string(v.size()) + " vs " +
                                std::to_string(w.size()));
}

}  // namespace

bool is_supported_order(int q, const Caps& caps)
{
    return q <= caps.field_max_q && q <= FiniteField::max_order && prime_power(q).has_value();
}

FiniteField make_field(int q, const Caps& caps)
{
    if (!is_supported_order(q, caps))
        throw NotAPrimePower(q);
    const auto [p, d] = *prime_power(q);

    FiniteField f;
    f.q_ = q;
    f.p_ = p;
    f.degree_ = d;
    f.modulus_ = d == 1 ? Poly{0, 1} : smallest_irreducible(p, d);

    for (int a = 0; a < q; ++a) {
        const Poly pa = from_index(a, p, d);
        for (int b = 0; b < q; ++b) {
            const Poly pb = from_index(b, p, d);
            int sum = 0;
            for (int i = d - 1; i >= 0; --i)
                sum = sum * p + (pa[i] + pb[i]) % p;
            f.add_[a * q + b] = static_cast<Element>(sum);

            Poly prod(2 * d, 0);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
            Poly red = d == 1 ? Poly{prod[0] % p} : poly_mod(prod, f.modulus_, p);
            red.resize(d, 0);
            int idx = 0;
            for (int i = d - 1; i >= 0; --i)
                idx = idx * p + red[i];
            f.mul_[a * q + b] = static_cast<Element>(idx);
        }
    }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            if (f.add_[a * q + b] == 0)
                f.neg_[a] = static_cast<Element>(b);
            if (f.mul_[a * q + b] == 1)
                f.inv_[a] = static_cast<Element>(b);
        }
    for (int g = 1; g < q; ++g)
        if (f.order(static_cast<Element>(g)) == q - 1) {
            f.primitive_ = static_cast<Element>(g);
            break;
        }
    return f;
}

Element FiniteField::pow(Element a, long long e) const
{
    Element r = 1;
    Element base = a;
    while (e > 0) {
        if (e & 1)
            r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

int FiniteField::order(Element a) const
{
    Element x = a;
    int n = 1;
    while (x != 1) {
        x = mul(x, a);
        ++n;
        if (n > q_)
            return 0;
    }
    return n;
}

// --- vectors ---------------------------------------------------------------

Vector unit(int k, int i)
{
    Vector v = Vector::Zero(k);
    v(i) = 1;
    return v;
}

Element inner(const FiniteField& f, const Vector& v, const Vector& w)
{
    require_same_length(v, w);
    Element s = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        s = f.add(s, f.mul(v(i), w(i)));
    return s;
}

Vector add(const FiniteField& f, const Vector& v, const Vector& w)
{
    require_same_length(v, w);
    Vector r(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        r(i) = f.add(v(i), w(i));
    return r;
}

Vector scale(const FiniteField& f, Element lambda, const Vector& v)
{
    Vector r(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i)
        r(i) = f.mul(lambda, v(i));
    return r;
}

bool is_zero(const Vector& v)
{
    return std::all_of(v.data(), v.data() + v.size(), [](Element x) { return x == 0; });
}

bool is_normal(const Vector& v)
{
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) != 0)
            return v(i) == 1;
    return false;
}

Vector normalize(const FiniteField& f, const Vector& a)
{
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a(i) != 0)
            return scale(f, f.inv(a(i)), a);
    throw ZeroVector();
}

bool lex_less(const Vector& a, const Vector& b)
{
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

std::vector<Vector> enumerate_vectors(const FiniteField& f, int k)
{
    std::vector<Vector> out;
    Vector v = Vector::Zero(k);
    while (true) {
        out.push_back(v);
        int i = k - 1;
        while (i >= 0 && v(i) == f.q() - 1)
            v(i--) = 0;
        if (i < 0)
            break;
        ++v(i);
    }
    return out;
}

std::vector<Vector> enumerate_normal_vectors(const FiniteField& f, int k)
{
    if (k < 1)
        throw DimensionMismatch("dimension must be at least 1");
    std::vector<Vector> out;
    // Lexicographic order puts later pivots first.
    for (int pivot = k - 1; pivot >= 0; --pivot) {
        const int tail = k - 1 - pivot;
        for (const Vector& t : enumerate_vectors(f, tail == 0 ? 1 : tail)) {
            Vector v = Vector::Zero(k);
            v(pivot) = 1;
            if (tail > 0)
                v.tail(tail) = t;
            out.push_back(v);
            if (tail == 0)
                break;
        }
    }
    return out;
}

std::size_t normal_index(const FiniteField& f, const Vector& a)
{
    if (!is_normal(a))
        throw DimensionMismatch("vector is not normal");
    const int k = static_cast<int>(a.size());
    int pivot = 0;
    while (a(pivot) == 0)
        ++pivot;
    const int tail = k - 1 - pivot;
    std::size_t before = 0;
    std::size_t block = 1;
    for (int t = 0; t < tail; ++t) {
        before += block;
        block *= f.q();
    }
    std::size_t offset = 0;
    for (int i = pivot + 1; i < k; ++i)
        offset = offset * f.q() + a(i);
    return before + offset;
}

// --- matrices --------------------------------------------------------------

Matrix multiply(const FiniteField& f, const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix product shapes do not agree");
    Matrix c = Matrix::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index t = 0; t < a.cols(); ++t) {
            const Element x = a(i, t);
            if (x == 0)
                continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j)
                c(i, j) = f.add(c(i, j), f.mul(x, b(t, j)));
        }
    return c;
}

Vector multiply(const FiniteField& f, const Matrix& a, const Vector& x)
{
    Matrix col = x;
    return multiply(f, a, col);
}

std::vector<int> reduce_row_echelon(const FiniteField& f, Matrix& a)
{
    std::vector<int> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
        Eigen::Index sel = row;
        while (sel < a.rows() && a(sel, col) == 0)
            ++sel;
        if (sel == a.rows())
            continue;
        a.row(row).swap(a.row(sel));
        const Element s = f.inv(a(row, col));
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            a(row, j) = f.mul(s, a(row, j));
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0)
                continue;
            const Element c = f.neg(a(r, col));
            for (Eigen::Index j = 0; j < a.cols(); ++j)
                a(r, j) = f.add(a(r, j), f.mul(c, a(row, j)));
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

int rank(const FiniteField& f, Matrix a)
{
    return static_cast<int>(reduce_row_echelon(f, a).size());
}

Element determinant(const FiniteField& f, Matrix a)
{
    if (a.rows() != a.cols())
        throw DimensionMismatch("determinant of a non-square matrix");
    const Eigen::Index n = a.rows();
    Element det = 1;
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index sel = col;
        while (sel < n && a(sel, col) == 0)
            ++sel;
        if (sel == n)
            return 0;
        if (sel != col) {
            a.row(col).swap(a.row(sel));
            det = f.neg(det);
        }
        det = f.mul(det, a(col, col));
        const Element s = f.inv(a(col, col));
        for (Eigen::Index r = col + 1; r < n; ++r) {
            if (a(r, col) == 0)
                continue;
            const Element c = f.neg(f.mul(a(r, col), s));
            for (Eigen::Index j = col; j < n; ++j)
                a(r, j) = f.add(a(r, j), f.mul(c, a(col, j)));
        }
    }
    return det;
}

Matrix invert(const FiniteField& f, const Matrix& a)
{
    if (a.rows() != a.cols())
        throw Singular();
    const Eigen::Index n = a.rows();
    Matrix aug(n, 2 * n);
    aug << a, Matrix::Identity(n, n);
    const auto pivots = reduce_row_echelon(f, aug);
    if (static_cast<Eigen::Index>(pivots.size()) < n || (n > 0 && pivots[n - 1] >= n))
        throw Singular();
    return aug.rightCols(n);
}

std::optional<Vector> solve(const FiniteField& f, const Matrix& a, const Vector& b)
{
    if (a.rows() != b.size())
        throw DimensionMismatch("right-hand side length does not match rows");
    Matrix aug(a.rows(), a.cols() + 1);
    aug << a, b;
    const auto pivots = reduce_row_echelon(f, aug);
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;
    Vector x = Vector::Zero(a.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x(pivots[r]) = aug(r, a.cols());
    return x;
}

Matrix nullspace(const FiniteField& f, const Matrix& a)
{
    Matrix r = a;
    const auto pivots = reduce_row_echelon(f, r);
    std::vector<int> free_cols;
    for (int c = 0, p = 0; c < a.cols(); ++c) {
        if (p < static_cast<int>(pivots.size()) && pivots[p] == c)
            ++p;
        else
            free_cols.push_back(c);
    }
    Matrix basis = Matrix::Zero(a.cols(), static_cast<Eigen::Index>(free_cols.size()));
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        basis(free_cols[j], j) = 1;
        for (std::size_t row = 0; row < pivots.size(); ++row)
            basis(pivots[row], j) = f.neg(r(row, free_cols[j]));
    }
    return basis;
}

}  // namespace lindq::gf
