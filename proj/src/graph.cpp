#include "subkdom/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace subkdom {

Graph::Graph(int n) {
    if (n < 0) throw DomainError("graph order must be nonnegative");
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
    neighbors_.resize(static_cast<std::size_t>(n_));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw DomainError("vertex " + std::to_string(v) + " out of range [0, " +
                          std::to_string(n_) + ")");
}

void Graph::set_bit(int u, int v) {
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

bool Graph::test_bit(int u, int v) const {
    return bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63) & 1;
}

void Graph::rebuild_lists() {
    m_ = 0;
    for (int v = 0; v < n_; ++v) {
        auto& list = neighbors_[static_cast<std::size_t>(v)];
        list.clear();
        for (int w = 0; w < words_; ++w) {
            std::uint64_t word = bits_[static_cast<std::size_t>(v) * words_ + w];
            while (word) {
                const int bit = std::countr_zero(word);
                list.push_back(w * 64 + bit);
                word &= word - 1;
            }
        }
        m_ += static_cast<int>(list.size());
    }
    m_ /= 2;
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw MalformedInputError("edge endpoint out of range [0, " + std::to_string(n) +
                                      "): (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u == v)
            throw MalformedInputError("self-loop at vertex " + std::to_string(u));
        g.set_bit(u, v);
    }
    g.rebuild_lists();
    return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return test_bit(u, v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(neighbors_[static_cast<std::size_t>(v)].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return neighbors_[static_cast<std::size_t>(v)];
}

std::vector<int> Graph::degrees() const {
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) out[static_cast<std::size_t>(v)] = degree(v);
    return out;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int best = n_;
    for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::uint64_t Graph::row64(int v) const {
    check_vertex(v);
    if (n_ > 64) throw DomainError("row64 requires order <= 64");
    return words_ == 0 ? 0 : bits_[static_cast<std::size_t>(v) * words_];
}

Graph Graph::delete_edge(int u, int v) const {
    if (!adjacent(u, v))
        throw DomainError("delete_edge: (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") is not an edge");
    Graph g(*this);
    g.bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
    g.bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
    g.rebuild_lists();
    return g;
}

Graph Graph::add_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("add_edge: self-loop at vertex " + std::to_string(u));
    if (test_bit(u, v))
        throw DomainError("add_edge: (" + std::to_string(u) + ", " + std::to_string(v) +
                          ") is already an edge");
    Graph g(*this);
    g.set_bit(u, v);
    g.rebuild_lists();
    return g;
}

Graph Graph::delete_vertex(int v) const {
    check_vertex(v);
    Graph g(n_ - 1);
    for (int u = 0; u < n_; ++u) {
        if (u == v) continue;
        const int nu = u < v ? u : u - 1;
        for (int w : neighbors_[static_cast<std::size_t>(u)]) {
            if (w == v || w < u) continue;
            const int nw = w < v ? w : w - 1;
            g.set_bit(nu, nw);
        }
    }
    g.rebuild_lists();
    return g;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!test_bit(u, v)) g.set_bit(u, v);
    g.rebuild_lists();
    return g;
}

}  // namespace subkdom
