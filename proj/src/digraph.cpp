#include "lindq/digraph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "lindq/errors.hpp"
#include "lindq/hom.hpp"

namespace lindq {

Digraph::Digraph(int n) : n_(n), out_(n, Bitset(n)), in_(n, Bitset(n)) {}

Digraph::Digraph(int n, const std::vector<std::pair<int, int>>& arcs) : Digraph(n)
{
    for (auto [u, v] : arcs)
        add_arc(u, v);
}

Digraph Digraph::from_rows(std::vector<Bitset> out_rows)
{
    const int n = static_cast<int>(out_rows.size());
    Digraph g(n);
    for (int u = 0; u < n; ++u) {
        if (out_rows[u].size() != n || out_rows[u].test(u))
            throw InvalidVertex("malformed adjacency row " + std::to_string(u));
        const Bitset& row = out_rows[u];
        for (int v = row.find_first(); v != Bitset::npos; v = row.find_next(v))
            g.in_[v].set(u);
    }
    g.out_ = std::move(out_rows);
    return g;
}

Digraph Digraph::from_rows(std::vector<Bitset> out_rows, std::vector<Bitset> in_rows)
{
    const int n = static_cast<int>(out_rows.size());
    if (static_cast<int>(in_rows.size()) != n)
        throw InvalidVertex("row count mismatch");
    for (int u = 0; u < n; ++u)
        if (out_rows[u].size() != n || in_rows[u].size() != n || out_rows[u].test(u) || in_rows[u].test(u))
            throw InvalidVertex("malformed adjacency row " + std::to_string(u));
    Digraph g;
    g.n_ = n;
    g.out_ = std::move(out_rows);
    g.in_ = std::move(in_rows);
    return g;
}

void Digraph::add_arc(int u, int v)
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw InvalidVertex("arc endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v)
        throw InvalidVertex("self-loop at vertex " + std::to_string(u));
    out_[u].set(v);
    in_[v].set(u);
}

void Digraph::remove_arc(int u, int v)
{
    out_[u].reset(v);
    in_[v].reset(u);
}

long long Digraph::arc_count() const
{
    long long c = 0;
    for (const auto& row : out_)
        c += row.count();
    return c;
}

std::vector<std::pair<int, int>> Digraph::arcs() const
{
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = out_[u].find_first(); v != Bitset::npos; v = out_[u].find_next(v))
            out.emplace_back(u, v);
    return out;
}

void Digraph::set_labels(std::vector<std::string> labels)
{
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw InvalidVertex("label count does not match vertex count");
    labels_ = std::move(labels);
}

// --- constructors ----------------------------------------------------------

Digraph edgeless(int n) { return Digraph(n); }

Digraph complete_digraph(int n) { return complement(Digraph(n)); }

Digraph directed_cycle(int n)
{
    Digraph g(n);
    for (int i = 0; i < n && n >= 2; ++i)
        g.add_arc(i, (i + 1) % n);
    return g;
}

Digraph digraph_from_code(int n, unsigned long long code)
{
    Digraph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v)
                continue;
            if ((code >> bit) & 1u)
                g.add_arc(u, v);
            ++bit;
        }
    return g;
}

// --- structure -------------------------------------------------------------

Digraph complement(const Digraph& g)
{
    Digraph c(g.n_);
    for (int u = 0; u < g.n_; ++u) {
        c.out_[u] = g.out_[u];
        c.out_[u].flip();
        c.out_[u].reset(u);
        c.in_[u] = g.in_[u];
        c.in_[u].flip();
        c.in_[u].reset(u);
    }
    c.labels_ = g.labels_;
    return c;
}

Digraph induced_subgraph(const Digraph& g, const std::vector<int>& vertices)
{
    const int m = static_cast<int>(vertices.size());
    Digraph h(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (i != j && g.has_arc(vertices[i], vertices[j]))
                h.add_arc(i, j);
    if (g.has_labels()) {
        std::vector<std::string> labels;
        for (int v : vertices)
            labels.push_back(g.labels()[v]);
        h.set_labels(std::move(labels));
    }
    return h;
}

bool is_proper_coloring(const Digraph& g, const Coloring& c, const std::vector<int>& vertices)
{
    if (static_cast<int>(c.assignment.size()) != g.size())
        return false;
    for (int v : vertices)
        if (c.assignment[v] < 0 || c.assignment[v] >= c.num_colors)
            return false;
    for (int u : vertices)
        for (int v : vertices)
            if (u != v && g.has_arc(u, v) && c.assignment[u] == c.assignment[v])
                return false;
    return true;
}

bool is_proper_coloring(const Digraph& g, const Coloring& c)
{
    std::vector<int> all(g.size());
    std::iota(all.begin(), all.end(), 0);
    return is_proper_coloring(g, c, all);
}

bool is_independent_set(const Digraph& g, const std::vector<int>& vertices)
{
    for (int u : vertices)
        for (int v : vertices)
            if (u != v && g.has_arc(u, v))
                return false;
    return true;
}

// --- maximum clique --------------------------------------------------------

namespace {

void require_cap(const char* what, long long value, long long cap)
{
    if (value > cap)
        throw SizeLimitExceeded(what, value, cap);
}

// Branch and bound with greedy colour-class bounds.
class CliqueSearch {
public:
    explicit CliqueSearch(std::vector<Bitset> rows) : rows_(std::move(rows)) {}

    std::vector<int> run()
    {
        const int n = static_cast<int>(rows_.size());
        std::vector<int> current;
        expand(Bitset(n, true), current);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void expand(Bitset p, std::vector<int>& current)
    {
        std::vector<int> order;
        std::vector<int> bound;
        color_sort(p, order, bound);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(current.size()) + bound[i] <= static_cast<int>(best_.size()))
                return;
            const int v = order[i];
            current.push_back(v);
            Bitset next = p & rows_[v];
            if (next.none()) {
                if (current.size() > best_.size())
                    best_ = current;
            } else {
                expand(std::move(next), current);
            }
            current.pop_back();
            p.reset(v);
        }
    }

    void color_sort(const Bitset& p, std::vector<int>& order, std::vector<int>& bound) const
    {
        Bitset uncolored = p;
        int color = 0;
        while (uncolored.any()) {
            ++color;
            Bitset q = uncolored;
            while (q.any()) {
                const int v = q.find_first();
                uncolored.reset(v);
                q.reset(v);
                q.subtract(rows_[v]);
                order.push_back(v);
                bound.push_back(color);
            }
        }
    }

    std::vector<Bitset> rows_;
    std::vector<int> best_;
};

std::vector<int> max_clique_of_rows(std::vector<Bitset> rows)
{
    if (rows.empty())
        return {};
    return CliqueSearch(std::move(rows)).run();
}

}  // namespace

std::vector<int> maximum_clique(const Digraph& g, const Caps& caps)
{
    require_cap("clique search vertex count", g.size(), caps.clique_max_n);
    std::vector<Bitset> rows;
    for (int u = 0; u < g.size(); ++u)
        rows.push_back(g.out_row(u) & g.in_row(u));
    return max_clique_of_rows(std::move(rows));
}

int clique_number(const Digraph& g, const Caps& caps)
{
    return static_cast<int>(maximum_clique(g, caps).size());
}

std::vector<int> maximum_independent_set(const Digraph& g, const Caps& caps)
{
    return maximum_clique(complement(g), caps);
}

int independence_number(const Digraph& g, const Caps& caps)
{
    return static_cast<int>(maximum_independent_set(g, caps).size());
}

// --- chromatic number ------------------------------------------------------

namespace {

class ColoringSearch {
public:
    ColoringSearch(const Digraph& g, int lower) : n_(g.size()), lower_(lower)
    {
        for (int u = 0; u < n_; ++u)
            rows_.push_back(g.symmetric_row(u));
        colour_.assign(n_, -1);
    }

    void seed(const std::vector<int>& assignment, int used)
    {
        best_ = assignment;
        best_used_ = used;
    }

    // Colours `clique` with 0..|clique|-1 and searches the rest.
    void run(const std::vector<int>& clique)
    {
        int used = 0;
        for (int v : clique)
            colour_[v] = used++;
        recurse(static_cast<int>(clique.size()), used);
    }

    const std::vector<int>& best() const { return best_; }
    int best_used() const { return best_used_; }

private:
    // Colours used by neighbours of v, as a list of flags.
    std::vector<char> neighbour_colours(int v, int used) const
    {
        std::vector<char> seen(used + 1, 0);
        const Bitset& row = rows_[v];
        for (int u = row.find_first(); u != Bitset::npos; u = row.find_next(u))
            if (colour_[u] >= 0)
                seen[colour_[u]] = 1;
        return seen;
    }

    int pick(int used) const
    {
        int best = -1;
        int best_sat = -1;
        int best_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (colour_[v] >= 0)
                continue;
            const auto seen = neighbour_colours(v, used);
            const int sat = static_cast<int>(std::count(seen.begin(), seen.end(), 1));
            int deg = 0;
            const Bitset& row = rows_[v];
            for (int u = row.find_first(); u != Bitset::npos; u = row.find_next(u))
                deg += colour_[u] < 0;
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    void recurse(int coloured, int used)
    {
        if (used >= best_used_ || best_used_ == lower_)
            return;
        if (coloured == n_) {
            best_ = colour_;
            best_used_ = used;
            return;
        }
        const int v = pick(used);
        const auto seen = neighbour_colours(v, used);
        for (int c = 0; c < used; ++c) {
            if (seen[c])
                continue;
            colour_[v] = c;
            recurse(coloured + 1, used);
            colour_[v] = -1;
            if (best_used_ == lower_)
                return;
        }
        if (used + 1 < best_used_) {
            colour_[v] = used;
            recurse(coloured + 1, used + 1);
            colour_[v] = -1;
        }
    }

    int n_;
    int lower_;
    std::vector<Bitset> rows_;
    std::vector<int> colour_;
    std::vector<int> best_;
    int best_used_ = 0;
};

// Greedy DSATUR, used as the initial upper bound.
std::vector<int> dsatur_greedy(const Digraph& g, int& used)
{
    const int n = g.size();
    std::vector<int> colour(n, -1);
    used = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        int pick_sat = -1;
        int pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[v] >= 0)
                continue;
            std::vector<char> seen(used + 1, 0);
            int deg = 0;
            const Bitset row = g.symmetric_row(v);
            for (int u = row.find_first(); u != Bitset::npos; u = row.find_next(u)) {
                if (colour[u] >= 0)
                    seen[colour[u]] = 1;
                else
                    ++deg;
            }
            const int sat = static_cast<int>(std::count(seen.begin(), seen.end(), 1));
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        std::vector<char> seen(used + 1, 0);
        const Bitset row = g.symmetric_row(pick);
        for (int u = row.find_first(); u != Bitset::npos; u = row.find_next(u))
            if (colour[u] >= 0)
                seen[colour[u]] = 1;
        int c = 0;
        while (c < used && seen[c])
            ++c;
        colour[pick] = c;
        used = std::max(used, c + 1);
    }
    return colour;
}

}  // namespace

ChromaticResult chromatic_number(const Digraph& g, const Caps& caps)
{
    require_cap("chromatic search vertex count", g.size(), caps.clique_max_n);
    const int n = g.size();
    if (n == 0)
        return {0, {{}, 0}};

    std::vector<Bitset> sym;
    for (int u = 0; u < n; ++u)
        sym.push_back(g.symmetric_row(u));
    const std::vector<int> clique = max_clique_of_rows(sym);

    int greedy_used = 0;
    const std::vector<int> greedy = dsatur_greedy(g, greedy_used);

    ColoringSearch search(g, static_cast<int>(clique.size()));
    search.seed(greedy, greedy_used);
    if (greedy_used > static_cast<int>(clique.size()))
        search.run(clique);

    ChromaticResult r;
    r.chromatic_number = search.best_used();
    r.coloring = {search.best(), search.best_used()};
    return r;
}

// --- N(G, K) ---------------------------------------------------------------

namespace {

class InducedHomSearch {
public:
    InducedHomSearch(const Digraph& g, const Digraph& k, const Caps& caps)
        : g_(g), k_(k), caps_(caps)
    {
    }

    InducedHomResult run(std::vector<int> seed)
    {
        best_ = std::move(seed);
        std::vector<int> current;
        recurse(0, current);
        return {static_cast<int>(best_.size()), best_};
    }

private:
    void recurse(int index, std::vector<int>& current)
    {
        if (current.size() + (g_.size() - index) <= best_.size())
            return;
        if (index == g_.size()) {
            best_ = current;
            return;
        }
        current.push_back(index);
        if (hom_exists(induced_subgraph(g_, current), k_, {}, caps_))
            recurse(index + 1, current);
        current.pop_back();
        recurse(index + 1, current);
    }

    const Digraph& g_;
    const Digraph& k_;
    const Caps& caps_;
    std::vector<int> best_;
};

}  // namespace

InducedHomResult largest_induced_hom_subgraph(const Digraph& g, const Digraph& k, const Caps& caps)
{
    require_cap("induced subgraph search vertex count", g.size(), caps.subset_max_n);
    if (k.size() == 0 || g.size() == 0)
        return {};
    // Any independent set maps onto a single vertex of a nonempty target.
    return InducedHomSearch(g, k, caps).run(maximum_independent_set(g, caps));
}

// --- cores -----------------------------------------------------------------

std::vector<int> core_vertices(const Digraph& g, const Caps& caps)
{
    require_cap("core search vertex count", g.size(), caps.core_max_n);
    std::vector<int> current(g.size());
    std::iota(current.begin(), current.end(), 0);
    bool shrunk = true;
    while (shrunk && current.size() > 1) {
        shrunk = false;
        const Digraph whole = induced_subgraph(g, current);
        for (std::size_t i = 0; i < current.size(); ++i) {
            std::vector<int> rest = current;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            if (hom_exists(whole, induced_subgraph(g, rest), {}, caps)) {
                current = std::move(rest);
                shrunk = true;
                break;
            }
        }
    }
    return current;
}

Digraph core(const Digraph& g, const Caps& caps)
{
    return induced_subgraph(g, core_vertices(g, caps));
}

bool is_directed_cycle(const Digraph& g)
{
    const int n = g.size();
    if (n < 2)
        return false;
    for (int v = 0; v < n; ++v)
        if (g.out_degree(v) != 1 || g.in_degree(v) != 1)
            return false;
    int v = 0;
    for (int step = 1; step < n; ++step) {
        v = g.out_row(v).find_first();
        if (v == 0)
            return false;
    }
    return g.out_row(v).find_first() == 0;
}

bool are_isomorphic(const Digraph& a, const Digraph& b, const Caps& caps)
{
    if (a.size() != b.size() || a.arc_count() != b.arc_count())
        return false;
    const int n = a.size();
    require_cap("isomorphism test vertex count", n, caps.iso_max_n);

    auto profile = [](const Digraph& g) {
        std::vector<std::pair<int, int>> p;
        for (int v = 0; v < g.size(); ++v)
            p.emplace_back(g.out_degree(v), g.in_degree(v));
        std::sort(p.begin(), p.end());
        return p;
    };
    if (profile(a) != profile(b))
        return false;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = 0; v < n && ok; ++v)
                if (u != v && a.has_arc(u, v) != b.has_arc(perm[u], perm[v]))
                    ok = false;
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace lindq
