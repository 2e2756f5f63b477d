#include "lindq/hkq.hpp"

#include <algorithm>
#include <climits>
#include <sstream>

#include "lindq/errors.hpp"
#include "lindq/hom.hpp"

namespace lindq {

namespace {

long long sat_mul(long long a, long long b)
{
    if (a != 0 && b > LLONG_MAX / a)
        return LLONG_MAX;
    return a * b;
}

long long sat_pow(long long base, int e)
{
    long long r = 1;
    for (int i = 0; i < e; ++i)
        r = sat_mul(r, base);
    return r;
}

std::string vector_string(const gf::Vector& v)
{
    std::ostringstream os;
    os << '(';
    for (Eigen::Index i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << static_cast<int>(v(i));
    os << ')';
    return os.str();
}

}  // namespace

// --- HkqGraph --------------------------------------------------------------

HkqGraph::HkqGraph(gf::FiniteField field, int k, Digraph graph, std::vector<gf::Vector> normals,
                   std::vector<std::pair<int, int>> labels)
    : field_(field), k_(k), graph_(std::move(graph)), normals_(std::move(normals)),
      labels_(std::move(labels))
{
    const std::size_t m = normals_.size();
    index_.assign(m * m, -1);
    for (std::size_t x = 0; x < labels_.size(); ++x)
        index_[labels_[x].first * m + labels_[x].second] = static_cast<int>(x);
}

std::optional<int> HkqGraph::find_vertex(int v_index, int w_index) const
{
    const int m = static_cast<int>(normals_.size());
    if (v_index < 0 || w_index < 0 || v_index >= m || w_index >= m)
        return std::nullopt;
    const int x = index_[v_index * m + w_index];
    if (x < 0)
        return std::nullopt;
    return x;
}

std::optional<int> HkqGraph::find_vertex(const gf::Vector& v, const gf::Vector& w) const
{
    if (v.size() != k_ || w.size() != k_ || gf::is_zero(v) || gf::is_zero(w))
        return std::nullopt;
    const auto vi = gf::normal_index(field_, gf::normalize(field_, v));
    const auto wi = gf::normal_index(field_, gf::normalize(field_, w));
    return find_vertex(static_cast<int>(vi), static_cast<int>(wi));
}

std::string HkqGraph::label_string(int vertex) const
{
    return vector_string(first(vertex)) + "|" + vector_string(second(vertex));
}

// --- construction ----------------------------------------------------------

long long hkq_vertex_count(int q, int k)
{
    const long long projective = (sat_pow(q, k) - 1) / (q - 1);
    return sat_mul(projective, sat_pow(q, k - 1));
}

long long hkq_degree(int q, int k) { return sat_pow(q, 2 * (k - 1)) - 1; }

HkqGraph construct_hkq(const gf::FiniteField& field, int k, const Caps& caps)
{
    if (k < 1)
        throw DimensionMismatch("H_k^q needs k >= 1");
    const long long count = hkq_vertex_count(field.q(), k);
    if (count > caps.hkq_max_vertices)
        throw SizeLimitExceeded("H_k^q vertex count", count, caps.hkq_max_vertices);

    std::vector<gf::Vector> normals = gf::enumerate_normal_vectors(field, k);
    const int m = static_cast<int>(normals.size());

    std::vector<char> nonzero(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            nonzero[i * m + j] = gf::inner(field, normals[i], normals[j]) != 0;

    std::vector<std::pair<int, int>> labels;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (nonzero[i * m + j])
                labels.emplace_back(i, j);
    const int n = static_cast<int>(labels.size());

    // (x, y) is an arc iff <v(x), w(y)> != 0, so out-rows depend only on v(x)
    // and in-rows only on w(y).
    std::vector<Bitset> by_first(m, Bitset(n));
    std::vector<Bitset> by_second(m, Bitset(n));
    for (int y = 0; y < n; ++y)
        for (int i = 0; i < m; ++i)
            if (nonzero[i * m + labels[y].second])
                by_first[i].set(y);
    for (int x = 0; x < n; ++x)
        for (int j = 0; j < m; ++j)
            if (nonzero[labels[x].first * m + j])
                by_second[j].set(x);

    std::vector<Bitset> out(n);
    std::vector<Bitset> in(n);
    for (int x = 0; x < n; ++x) {
        out[x] = by_first[labels[x].first];
        out[x].reset(x);
        in[x] = by_second[labels[x].second];
        in[x].reset(x);
    }
    Digraph g = Digraph::from_rows(std::move(out), std::move(in));
    std::vector<std::string> names;
    for (const auto& [i, j] : labels)
        names.push_back(vector_string(normals[i]) + "|" + vector_string(normals[j]));
    g.set_labels(std::move(names));
    return HkqGraph(field, k, std::move(g), std::move(normals), std::move(labels));
}

// --- automorphisms ---------------------------------------------------------

bool is_automorphism(const Digraph& g, const VertexPermutation& p)
{
    const int n = g.size();
    if (static_cast<int>(p.size()) != n)
        return false;
    std::vector<char> hit(n, 0);
    for (int x : p) {
        if (x < 0 || x >= n || hit[x])
            return false;
        hit[x] = 1;
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.has_arc(u, v) != g.has_arc(p[u], p[v]))
                return false;
    return true;
}

VertexPermutation inverse_permutation(const VertexPermutation& p)
{
    VertexPermutation inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        inv[p[i]] = static_cast<int>(i);
    return inv;
}

VertexPermutation compose(const VertexPermutation& a, const VertexPermutation& b)
{
    VertexPermutation c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        c[i] = a[b[i]];
    return c;
}

VertexPermutation transitivity_automorphism(const HkqGraph& h, int source)
{
    if (source < 0 || source >= h.size())
        throw InvalidVertex("vertex " + std::to_string(source) + " is not in H_k^q");
    const auto& f = h.field();
    const int k = h.k();
    const gf::Vector& d = h.first(source);
    const gf::Vector& e = h.second(source);

    gf::Matrix dt = d.transpose();
    const gf::Matrix xi = gf::nullspace(f, dt);
    gf::Matrix x(k, k);
    x.col(0) = e;
    if (k > 1)
        x.rightCols(k - 1) = xi;
    const gf::Matrix xt = x.transpose();
    const gf::Matrix x_inv = gf::invert(f, x);

    const auto& normals = h.normals();
    std::vector<int> map_first(normals.size());
    std::vector<int> map_second(normals.size());
    for (std::size_t i = 0; i < normals.size(); ++i) {
        map_first[i] = static_cast<int>(
            gf::normal_index(f, gf::normalize(f, gf::multiply(f, xt, normals[i]))));
        map_second[i] = static_cast<int>(
            gf::normal_index(f, gf::normalize(f, gf::multiply(f, x_inv, normals[i]))));
    }

    VertexPermutation phi(h.size());
    for (int y = 0; y < h.size(); ++y) {
        const auto image = h.find_vertex(map_first[h.label(y).first], map_second[h.label(y).second]);
        if (!image)
            throw VerificationFailed("automorphism image left the vertex set");
        phi[y] = *image;
    }
    return phi;
}

// --- colourings and independent sets -----------------------------------------

Coloring hkq_complement_coloring(const HkqGraph& h)
{
    Coloring c;
    c.assignment.resize(h.size());
    for (int x = 0; x < h.size(); ++x)
        c.assignment[x] = h.label(x).first;
    c.num_colors = static_cast<int>(h.normals().size());
    return c;
}

long long independent_set_bound_times4(int q, int k)
{
    return sat_mul(static_cast<long long>(q) * q - 1, sat_pow(q, k - 2));
}

long long l_colorable_bound_times4(int q, int k, int l)
{
    return sat_mul(sat_mul(q + 1, sat_pow(q, l) - 1), sat_pow(q, k - l - 1));
}

namespace {

// Block on 0-based coordinates (p, p+1).
ProductBlock product_block(const HkqGraph& h, int p)
{
    const auto& f = h.field();
    const int k = h.k();
    const gf::Element g = f.primitive_element();
    const int half = (f.q() - 3) / 2;

    ProductBlock block;
    std::vector<gf::Element> forbidden;
    for (int i = 0; i <= half; ++i) {
        gf::Vector a = gf::unit(k, p);
        a(p + 1) = f.pow(g, i);
        block.a.push_back(a);
        // 1 + g^i x = 0 exactly at x = -g^-i.
        forbidden.push_back(f.neg(f.inv(f.pow(g, i))));
    }
    block.a.push_back(gf::unit(k, p));

    const int tail = k - p - 2;
    const auto tails = tail > 0 ? gf::enumerate_vectors(f, tail) : std::vector<gf::Vector>{gf::Vector()};
    for (int x = 0; x < f.q(); ++x) {
        if (std::find(forbidden.begin(), forbidden.end(), x) != forbidden.end())
            continue;
        for (const auto& t : tails) {
            gf::Vector b = gf::unit(k, p);
            b(p + 1) = static_cast<gf::Element>(x);
            if (tail > 0)
                b.tail(tail) = t;
            block.b.push_back(b);
        }
    }

    for (const auto& a : block.a)
        for (const auto& b : block.b) {
            if (gf::inner(f, a, b) == 0)
                throw VerificationFailed("product block pair has zero inner product");
            const auto x = h.find_vertex(a, b);
            if (!x)
                throw VerificationFailed("product block pair is not a vertex");
            block.vertices.push_back(*x);
        }
    std::sort(block.vertices.begin(), block.vertices.end());
    return block;
}

// Independent in complement(H) iff every ordered pair is an arc of H.
bool independent_in_complement(const HkqGraph& h, const std::vector<int>& vertices)
{
    Bitset members(h.size());
    for (int v : vertices)
        members.set(v);
    for (int v : vertices) {
        Bitset missing = members;
        missing.reset(v);
        missing.subtract(h.graph().out_row(v));
        if (missing.any())
            return false;
    }
    return true;
}

void require_odd(const HkqGraph& h)
{
    if (h.q() % 2 == 0)
        throw ConstructionUnavailable("product-set construction needs odd q, got q = " +
                                      std::to_string(h.q()));
}

}  // namespace

ProductBlock hkq_complement_independent_set(const HkqGraph& h)
{
    require_odd(h);
    if (h.k() < 2)
        throw ConstructionUnavailable("product-set construction needs k >= 2");
    ProductBlock block = product_block(h, 0);
    if (!independent_in_complement(h, block.vertices))
        throw VerificationFailed("product set is not independent in the complement");
    if (4 * static_cast<long long>(block.vertices.size()) < independent_set_bound_times4(h.q(), h.k()))
        throw VerificationFailed("product set is smaller than guaranteed");
    return block;
}

LColorableSet hkq_complement_l_colorable_set(const HkqGraph& h, int l)
{
    require_odd(h);
    if (l == 1)
        return [&] {
            LColorableSet s;
            s.blocks.push_back(hkq_complement_independent_set(h));
            s.vertices = s.blocks[0].vertices;
            s.coloring.assignment.assign(h.size(), -1);
            for (int v : s.vertices)
                s.coloring.assignment[v] = 0;
            s.coloring.num_colors = 1;
            return s;
        }();
    if (l < 1 || l >= h.k() - 1)
        throw ConstructionUnavailable("l-colourable construction needs 1 < l < k - 1");

    LColorableSet s;
    s.coloring.assignment.assign(h.size(), -1);
    s.coloring.num_colors = l;
    for (int j = 0; j < l; ++j) {
        ProductBlock block = product_block(h, j);
        if (!independent_in_complement(h, block.vertices))
            throw VerificationFailed("colour class is not independent in the complement");
        for (int v : block.vertices) {
            if (s.coloring.assignment[v] != -1)
                throw VerificationFailed("colour classes overlap");
            s.coloring.assignment[v] = j;
            s.vertices.push_back(v);
        }
        s.blocks.push_back(std::move(block));
    }
    std::sort(s.vertices.begin(), s.vertices.end());
    if (!is_proper_coloring(complement(h.graph()), s.coloring, s.vertices))
        throw VerificationFailed("colouring of the union is not proper");
    if (4 * static_cast<long long>(s.vertices.size()) < l_colorable_bound_times4(h.q(), h.k(), l))
        throw VerificationFailed("l-colourable set is smaller than guaranteed");
    return s;
}

// --- hardness premises -------------------------------------------------------

WitnessReport np_witness_check(const HkqGraph& h, const Caps& caps)
{
    if (h.k() < 2)
        throw ConstructionUnavailable("witness check needs k >= 2");
    const auto& f = h.field();
    const int k = h.k();
    const Digraph comp = complement(h.graph());

    WitnessReport r;
    r.min_in_degree = comp.size() ? comp.in_degree(0) : 0;
    r.min_out_degree = comp.size() ? comp.out_degree(0) : 0;
    for (int v = 0; v < comp.size(); ++v) {
        r.min_in_degree = std::min(r.min_in_degree, comp.in_degree(v));
        r.min_out_degree = std::min(r.min_out_degree, comp.out_degree(v));
    }
    r.degrees_ok = r.min_in_degree >= 2 && r.min_out_degree >= 2;

    const gf::Vector e1 = gf::unit(k, 0);
    const gf::Vector e2 = gf::unit(k, 1);
    const gf::Vector e1_minus_e2 = gf::add(f, e1, gf::scale(f, f.neg(1), e2));
    const gf::Vector e1_plus_e2 = gf::add(f, e1, e2);
    const std::vector<std::pair<gf::Vector, gf::Vector>> labels = {
        {e2, e1_minus_e2}, {e1_plus_e2, e2}, {e1, e1}, {e2, e2}};
    // 0 -> 2 -> 1 -> 0 and 3 <-> 2
    r.gadget_arcs = {{0, 2}, {2, 1}, {1, 0}, {3, 2}, {2, 3}};

    bool all_found = true;
    for (const auto& [v, w] : labels) {
        const auto x = h.find_vertex(v, w);
        r.gadget_vertices.push_back(x ? *x : -1);
        all_found = all_found && x.has_value();
    }
    if (all_found) {
        for (auto [a, b] : r.gadget_arcs)
            if (!comp.has_arc(r.gadget_vertices[a], r.gadget_vertices[b]))
                r.missing_arcs.emplace_back(a, b);
        r.gadget_present = r.missing_arcs.empty();
    }
    if (!r.gadget_present)
        return r;

    const Digraph gadget = induced_subgraph(comp, r.gadget_vertices);
    r.gadget_induced = gadget.arc_count() == static_cast<long long>(r.gadget_arcs.size());

    for (int m = 2; m <= gadget.size(); ++m) {
        r.cycle_lengths_checked.push_back(m);
        if (hom_exists(gadget, directed_cycle(m), {}, caps))
            r.cycle_lengths_with_hom.push_back(m);
    }
    r.no_cycle_hom = r.cycle_lengths_with_hom.empty();
    return r;
}

}  // namespace lindq
