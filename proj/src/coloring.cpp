#include "cocrit/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace cocrit {

PairParams::PairParams(int t_, int k_) : t(t_), k(k_) {
    if (t < 3) throw std::invalid_argument("t must be >= 3");
    if (k < 3) throw std::invalid_argument("k must be >= 3");
}

SearchBudget::SearchBudget(uint64_t nodes, std::chrono::milliseconds wall)
    : node_limit(nodes), wall_limit(wall) {
    if (node_limit == 0 || wall_limit <= std::chrono::milliseconds::zero())
        throw std::invalid_argument("search budget must be positive");
}

EdgeColoring::EdgeColoring(const Graph& host, std::vector<Color> by_edge)
    : n_(host.order()), edges_(host.edges()), color_(std::move(by_edge)) {
    if (edges_.size() != color_.size())
        throw std::invalid_argument("coloring size does not match host edge count");
}

Color EdgeColoring::at(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v))
        throw std::invalid_argument("not an edge of the colored host");
    return color_[it - edges_.begin()];
}

int EdgeColoring::red_count() const {
    return int(std::count(color_.begin(), color_.end(), Color::Red));
}

std::vector<int> EdgeColoring::blue_degrees() const {
    std::vector<int> deg(n_, 0);
    for (size_t i = 0; i < edges_.size(); ++i)
        if (color_[i] == Color::Blue) {
            ++deg[edges_[i].first];
            ++deg[edges_[i].second];
        }
    return deg;
}

Graph EdgeColoring::red_subgraph() const {
    Graph g(n_);
    for (size_t i = 0; i < edges_.size(); ++i)
        if (color_[i] == Color::Red) g.add_edge(edges_[i].first, edges_[i].second);
    return g;
}

Graph EdgeColoring::blue_subgraph() const {
    Graph g(n_);
    for (size_t i = 0; i < edges_.size(); ++i)
        if (color_[i] == Color::Blue) g.add_edge(edges_[i].first, edges_[i].second);
    return g;
}

bool EdgeColoring::matches(const Graph& g) const { return g.order() == n_ && g.edges() == edges_; }

std::string EdgeColoring::serialize() const {
    std::string out;
    for (size_t i = 0; i < edges_.size(); ++i) {
        out += std::to_string(edges_[i].first);
        out += ' ';
        out += std::to_string(edges_[i].second);
        out += color_[i] == Color::Red ? " R\n" : " B\n";
    }
    return out;
}

bool is_critical(const Graph& g, const EdgeColoring& c, const PairParams& p) {
    if (!c.matches(g)) throw std::invalid_argument("coloring does not match host graph");
    for (int d : c.blue_degrees())
        if (d > p.k - 1) return false;
    return !c.red_subgraph().has_clique(p.t);
}

}  // namespace cocrit
