#include "lindq/hom.hpp"

#include <algorithm>
#include <numeric>

#include "lindq/errors.hpp"

namespace lindq {

namespace {

class HomSearch {
public:
    HomSearch(const Digraph& g, const Digraph& h) : g_(g), h_(h), n_(g.size())
    {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return g.out_degree(a) + g.in_degree(a) > g.out_degree(b) + g.in_degree(b);
        });
        map_.assign(n_, -1);
    }

    // Returns true as soon as `count` reaches `limit`.
    bool run(std::size_t limit, bool pin_first)
    {
        limit_ = limit;
        count_ = 0;
        std::vector<Bitset> domains(n_, Bitset(h_.size(), true));
        if (n_ > 0 && pin_first && h_.size() > 0) {
            domains[order_[0]] = Bitset(h_.size());
            domains[order_[0]].set(0);
        }
        // A vertex with an out-arc needs an image with an out-arc, and so on.
        Bitset has_out(h_.size());
        Bitset has_in(h_.size());
        for (int t = 0; t < h_.size(); ++t) {
            has_out.set(t, h_.out_degree(t) > 0);
            has_in.set(t, h_.in_degree(t) > 0);
        }
        for (int u = 0; u < n_; ++u) {
            if (g_.out_degree(u) > 0)
                domains[u] &= has_out;
            if (g_.in_degree(u) > 0)
                domains[u] &= has_in;
            if (domains[u].none())
                return false;
        }
        return recurse(0, domains);
    }

    std::size_t count() const { return count_; }
    const std::vector<int>& witness() const { return witness_; }

private:
    bool recurse(int depth, const std::vector<Bitset>& domains)
    {
        if (depth == n_) {
            if (count_ == 0)
                witness_ = map_;
            ++count_;
            return count_ >= limit_;
        }
        const int u = order_[depth];
        const Bitset& dom = domains[u];
        for (int t = dom.find_first(); t != Bitset::npos; t = dom.find_next(t)) {
            map_[u] = t;
            std::vector<Bitset> next = domains;
            bool wiped = false;
            for (int i = depth + 1; i < n_ && !wiped; ++i) {
                const int x = order_[i];
                if (g_.has_arc(u, x))
                    next[x] &= h_.out_row(t);
                if (g_.has_arc(x, u))
                    next[x] &= h_.in_row(t);
                wiped = next[x].none();
            }
            if (!wiped && recurse(depth + 1, next))
                return true;
        }
        map_[u] = -1;
        return false;
    }

    const Digraph& g_;
    const Digraph& h_;
    int n_;
    std::vector<int> order_;
    std::vector<int> map_;
    std::vector<int> witness_;
    std::size_t limit_ = 1;
    std::size_t count_ = 0;
};

void check_caps(const Digraph& g, const Digraph& h, const Caps& caps)
{
    if (g.size() > caps.hom_max_source)
        throw SizeLimitExceeded("homomorphism source vertex count", g.size(), caps.hom_max_source);
    if (h.size() > caps.hom_max_target)
        throw SizeLimitExceeded("homomorphism target vertex count", h.size(), caps.hom_max_target);
}

}  // namespace

bool is_homomorphism(const Digraph& g, const Digraph& h, const HomWitness& w)
{
    if (static_cast<int>(w.map.size()) != g.size())
        return false;
    for (int t : w.map)
        if (t < 0 || t >= h.size())
            return false;
    for (auto [u, v] : g.arcs())
        if (!h.has_arc(w.map[u], w.map[v]))
            return false;
    return true;
}

std::optional<HomWitness> hom_exists(const Digraph& g, const Digraph& h, HomOptions options,
                                     const Caps& caps)
{
    check_caps(g, h, caps);
    if (g.size() == 0)
        return HomWitness{};
    if (h.size() == 0)
        return std::nullopt;
    HomSearch search(g, h);
    if (!search.run(1, options.target_vertex_transitive))
        return std::nullopt;
    HomWitness w{search.witness()};
    if (!is_homomorphism(g, h, w))
        throw VerificationFailed("homomorphism search returned an invalid map");
    return w;
}

bool preorder_leq(const Digraph& g, const Digraph& h, const Caps& caps)
{
    return hom_exists(complement(g), complement(h), {}, caps).has_value();
}

std::size_t hom_count(const Digraph& g, const Digraph& h, std::size_t limit, const Caps& caps)
{
    check_caps(g, h, caps);
    if (limit == 0)
        return 0;
    if (g.size() == 0)
        return 1;
    if (h.size() == 0)
        return 0;
    HomSearch search(g, h);
    search.run(limit, false);
    return search.count();
}

}  // namespace lindq
