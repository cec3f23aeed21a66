#include <compat/generators.hpp>
#include <compat/random.hpp>

#include <stdexcept>

using std::invalid_argument;
using std::string;
using std::vector;

namespace compat {

namespace {
    auto require(bool ok, const string & message) -> void
    {
        if (! ok)
            throw invalid_argument(message);
    }

    auto add_bounded_pairs(const Graph & g, IncompatSystem & f, int delta, Rng & rng, double fill) -> void
    {
        for (Vertex v = 0; v < g.order(); ++v) {
            auto nbrs = g.neighbors(v).to_vector();
            vector<std::pair<Vertex, Vertex>> pairs;
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                    pairs.emplace_back(nbrs[i], nbrs[j]);
            rng.shuffle(pairs);
            for (auto [a, b] : pairs) {
                if (fill < 1.0 && rng.unit() >= fill)
                    continue;
                if (f.incompatible(v, a, b) || f.conflict_degree(v, a) >= delta || f.conflict_degree(v, b) >= delta)
                    continue;
                f.add(g, v, a, b);
            }
        }
    }
}

auto gen_two_cliques(int k) -> Graph
{
    require(k >= 2, "two-cliques needs k >= 2");
    Graph g(2 * k - 1);
    for (int base : {0, k - 1})
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                g.add_edge(base + i, base + j);
    return g;
}

auto gen_complete_bipartite(int k) -> Graph
{
    require(k >= 2, "complete-bipartite needs k >= 2");
    Graph g(2 * k - 1);
    for (int i = 0; i < k; ++i)
        for (int j = k; j < 2 * k - 1; ++j)
            g.add_edge(i, j);
    return g;
}

auto gen_bollobas_erdos(int k) -> ColoredInstance
{
    require(k >= 2, "bollobas-erdos needs k >= 2");
    int n = 4 * k - 1;
    int regularity = k % 2 == 0 ? k : k + 1;
    int a = regularity / 2;
    if (2 * a > (n - 1) / 2)
        throw std::logic_error("circulant offsets collide");

    Graph g(n);
    EdgeColoring coloring;
    for (int offset = 1; offset <= 2 * a; ++offset)
        for (int v = 0; v < n; ++v) {
            Edge e(v, (v + offset) % n);
            if (coloring.contains(e))
                continue;
            g.add_edge(e.u, e.v);
            coloring[e] = offset <= a ? 0 : 1;
        }
    auto system = gen_system_from_coloring(g, coloring);
    return ColoredInstance{std::move(g), std::move(system), std::move(coloring), regularity, regularity != k};
}

auto gen_random_dirac(int n, double extra_density, std::uint64_t seed) -> Graph
{
    require(n >= 3, "random-dirac needs n >= 3");
    require(extra_density >= 0.0 && extra_density <= 1.0, "density must lie in [0,1]");
    Rng rng(seed);
    Graph g(n);
    vector<Vertex> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = i;
    rng.shuffle(order);
    for (int i = 0; i < n; ++i) {
        auto u = order[i], v = order[(i + 1) % n];
        if (! g.adjacent(u, v))
            g.add_edge(u, v);
    }

    int floor = (n + 1) / 2;
    rng.shuffle(order);
    for (auto v : order) {
        auto candidates = (g.neighbors(v) | VertexSet(n, {v})).complement().to_vector();
        rng.shuffle(candidates);
        for (auto w : candidates) {
            if (g.degree(v) >= floor)
                break;
            g.add_edge(v, w);
        }
    }

    if (extra_density > 0.0)
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (! g.adjacent(u, v) && rng.unit() < extra_density)
                    g.add_edge(u, v);
    return g;
}

auto gen_near_bipartite(int m, int removed, std::uint64_t seed) -> Graph
{
    require(m >= 2, "near-bipartite needs m >= 2");
    require(removed >= 0 && removed <= m * (m - 1), "near-bipartite: too many removed edges");
    Rng rng(seed);
    Graph g(2 * m);
    vector<Edge> optional;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            g.add_edge(i, m + j);
            if (i != j)
                optional.emplace_back(i, m + j);
        }
    rng.shuffle(optional);
    for (int r = 0; r < removed; ++r)
        g.remove_edge(optional[r].u, optional[r].v);
    return g;
}

auto gen_random_bounded_system(const Graph & g, int delta, std::uint64_t seed, double fill) -> IncompatSystem
{
    require(delta >= 0, "boundedness cap must be non-negative");
    IncompatSystem f(g.order());
    Rng rng(seed);
    add_bounded_pairs(g, f, delta, rng, fill);
    return f;
}

auto gen_nested_systems(const Graph & g, const vector<int> & deltas, std::uint64_t seed, double fill)
    -> vector<IncompatSystem>
{
    vector<IncompatSystem> result;
    IncompatSystem f(g.order());
    int previous = -1;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        require(deltas[i] >= 0 && deltas[i] >= previous, "nested caps must be non-decreasing");
        Rng rng(mix_seed(seed, i));
        add_bounded_pairs(g, f, deltas[i], rng, fill);
        result.push_back(f);
        previous = deltas[i];
    }
    return result;
}

auto gen_system_from_coloring(const Graph & g, const EdgeColoring & coloring) -> IncompatSystem
{
    IncompatSystem f(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        auto nbrs = g.neighbors(v).to_vector();
        vector<int> colors;
        for (auto w : nbrs) {
            auto it = coloring.find(Edge(v, w));
            require(it != coloring.end(), "coloring misses an edge");
            colors.push_back(it->second);
        }
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (colors[i] == colors[j])
                    f.add(g, v, nbrs[i], nbrs[j]);
    }
    return f;
}

auto gen_blocking_system(const Graph & g, Vertex v) -> IncompatSystem
{
    IncompatSystem f(g.order());
    auto nbrs = g.neighbors(v).to_vector();
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            f.add(g, v, nbrs[i], nbrs[j]);
    return f;
}

auto generator_families() -> vector<string>
{
    return {"two-cliques", "complete-bipartite", "bollobas-erdos", "random-dirac", "near-bipartite"};
}

auto generate(const GenSpec & spec) -> GeneratedInstance
{
    auto with_random_system = [&](Graph g) {
        IncompatSystem f(g.order());
        if (spec.delta >= 0)
            f = gen_random_bounded_system(g, spec.delta, mix_seed(spec.seed, 1), spec.fill);
        return GeneratedInstance{std::move(g), std::move(f), {}};
    };

    if (spec.family == "two-cliques" || spec.family == "complete-bipartite") {
        auto g = spec.family == "two-cliques" ? gen_two_cliques(spec.k) : gen_complete_bipartite(spec.k);
        require(g.order() == 2 * spec.k - 1 && g.min_degree() == spec.k - 1, "family postcondition failed");
        auto inst = with_random_system(std::move(g));
        inst.notes.push_back("n = 2k-1, minimum degree k-1");
        return inst;
    }
    if (spec.family == "bollobas-erdos") {
        auto colored = gen_bollobas_erdos(spec.k);
        require(colored.graph.min_degree() == 2 * colored.regularity && colored.graph.max_degree() == 2 * colored.regularity,
            "family postcondition failed");
        GeneratedInstance inst{std::move(colored.graph), std::move(colored.system), {}};
        inst.notes.push_back("color classes are " + std::to_string(colored.regularity) + "-regular");
        if (colored.adjusted)
            inst.notes.push_back("k is odd: color-class regularity raised from k to k+1");
        return inst;
    }
    if (spec.family == "random-dirac") {
        auto g = gen_random_dirac(spec.n, spec.density, mix_seed(spec.seed, 0));
        require(is_dirac(g), "family postcondition failed");
        auto inst = with_random_system(std::move(g));
        inst.notes.push_back("Dirac: minimum degree " + std::to_string(inst.graph.min_degree()));
        return inst;
    }
    if (spec.family == "near-bipartite") {
        auto g = gen_near_bipartite(spec.m, spec.removed, mix_seed(spec.seed, 0));
        auto inst = with_random_system(std::move(g));
        inst.notes.push_back("matching {i, m+i} kept");
        return inst;
    }
    throw invalid_argument("unknown family '" + spec.family + "'");
}

} // namespace compat
