#include <compat/io.hpp>

#include <fstream>
#include <sstream>

using nlohmann::ordered_json;
using std::string;
using std::vector;

namespace compat {

namespace {
    auto line_error(int line, const string & what) -> ParseError
    {
        return ParseError("line " + std::to_string(line) + ": " + what);
    }

    auto vertex_list(const VertexSet & s) -> ordered_json
    {
        auto result = ordered_json::array();
        s.for_each([&](Vertex v) { result.push_back(v); });
        return result;
    }

    // Builds the instance, turning graph-level rejections into parse errors.
    auto build(int n, const vector<Edge> & edges, const vector<Conflict> & pairs) -> Instance
    {
        try {
            Graph g(n, edges);
            IncompatSystem f(n);
            for (auto & c : pairs)
                f.add(g, c.at, c.a, c.b);
            return Instance{std::move(g), std::move(f)};
        } catch (const GraphError & e) {
            throw ParseError(e.what());
        }
    }
}

auto parse_instance_text(const string & text) -> Instance
{
    std::istringstream in(text);
    string raw;
    int line_no = 0;
    int n = -1;
    vector<Edge> edges;
    vector<Conflict> pairs;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != string::npos)
            raw.erase(hash);
        std::istringstream fields(raw);
        string tag;
        if (! (fields >> tag))
            continue;
        vector<long> values;
        long value;
        while (fields >> value)
            values.push_back(value);
        if (! fields.eof())
            throw line_error(line_no, "expected integers after '" + tag + "'");
        auto expect = [&](std::size_t count) {
            if (values.size() != count)
                throw line_error(line_no, "'" + tag + "' takes " + std::to_string(count) + " values");
        };
        if (tag == "n") {
            expect(1);
            if (n >= 0)
                throw line_error(line_no, "duplicate vertex count");
            if (values[0] < 0 || values[0] > 1'000'000)
                throw line_error(line_no, "vertex count out of range");
            n = static_cast<int>(values[0]);
        } else if (n < 0) {
            throw line_error(line_no, "vertex count must come first");
        } else if (tag == "e") {
            expect(2);
            for (auto v : values)
                if (v < 0 || v >= n)
                    throw line_error(line_no, "vertex out of range");
            if (values[0] == values[1])
                throw line_error(line_no, "self-loop");
            edges.emplace_back(static_cast<Vertex>(values[0]), static_cast<Vertex>(values[1]));
        } else if (tag == "i") {
            expect(3);
            for (auto v : values)
                if (v < 0 || v >= n)
                    throw line_error(line_no, "vertex out of range");
            pairs.push_back(Conflict{static_cast<Vertex>(values[0]), static_cast<Vertex>(values[1]),
                static_cast<Vertex>(values[2])});
        } else {
            throw line_error(line_no, "unknown tag '" + tag + "'");
        }
    }
    if (n < 0)
        throw ParseError("missing vertex count");
    return build(n, edges, pairs);
}

auto parse_instance_json(const string & text) -> Instance
{
    try {
        auto doc = nlohmann::json::parse(text);
        auto n = doc.at("n").get<int>();
        if (n < 0)
            throw ParseError("vertex count out of range");
        auto in_range = [&](int v) {
            if (v < 0 || v >= n)
                throw ParseError("vertex out of range");
            return v;
        };
        vector<Edge> edges;
        for (auto & e : doc.value("edges", nlohmann::json::array())) {
            if (! e.is_array() || e.size() != 2)
                throw ParseError("edge must be [u, v]");
            auto u = in_range(e[0].get<int>()), v = in_range(e[1].get<int>());
            if (u == v)
                throw ParseError("self-loop");
            edges.emplace_back(u, v);
        }
        vector<Conflict> pairs;
        for (auto & c : doc.value("incompat", nlohmann::json::array())) {
            if (! c.is_array() || c.size() != 3)
                throw ParseError("incompatibility must be [v, a, b]");
            pairs.push_back(Conflict{in_range(c[0].get<int>()), in_range(c[1].get<int>()), in_range(c[2].get<int>())});
        }
        return build(n, edges, pairs);
    } catch (const nlohmann::json::exception & e) {
        throw ParseError(string("json: ") + e.what());
    }
}

auto parse_instance(const string & text) -> Instance
{
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != string::npos && text[first] == '{')
        return parse_instance_json(text);
    return parse_instance_text(text);
}

auto emit_instance_text(const Graph & g, const IncompatSystem & f, const vector<string> & comments) -> string
{
    std::ostringstream out;
    for (auto & c : comments)
        out << "# " << c << '\n';
    out << "n " << g.order() << '\n';
    for (auto & e : g.edges())
        out << "e " << e.u << ' ' << e.v << '\n';
    for (auto & c : f.pairs())
        out << "i " << c.at << ' ' << c.a << ' ' << c.b << '\n';
    return out.str();
}

auto emit_instance_json(const Graph & g, const IncompatSystem & f) -> string
{
    ordered_json doc;
    doc["n"] = g.order();
    doc["edges"] = ordered_json::array();
    for (auto & e : g.edges())
        doc["edges"].push_back({e.u, e.v});
    doc["incompat"] = ordered_json::array();
    for (auto & c : f.pairs())
        doc["incompat"].push_back({c.at, c.a, c.b});
    return doc.dump() + "\n";
}

auto read_file(const string & path) -> string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw ParseError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

auto write_file(const string & path, const string & content) -> void
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw std::runtime_error("cannot write " + path);
    out << content;
    if (! out)
        throw std::runtime_error("write failed for " + path);
}

auto parse_cycle(const string & text) -> Cycle
{
    auto spaced = text;
    for (auto & ch : spaced)
        if (ch == ',')
            ch = ' ';
    std::istringstream in(spaced);
    Cycle result;
    string token;
    while (in >> token) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(token, &used);
        } catch (const std::exception &) {
            throw ParseError("bad vertex '" + token + "'");
        }
        if (used != token.size() || v < 0)
            throw ParseError("bad vertex '" + token + "'");
        result.push_back(static_cast<Vertex>(v));
    }
    if (result.empty())
        throw ParseError("empty cycle");
    return result;
}

auto report_to_json(const SolveReport & report) -> ordered_json
{
    ordered_json doc;
    doc["outcome"] = to_string(report.outcome);
    doc["certified"] = report.certified;
    doc["absence_certified"] = report.absence_certified;
    doc["n"] = report.n;
    doc["stage"] = report.stage.empty() ? ordered_json(nullptr) : ordered_json(report.stage);
    doc["cycle"] = report.cycle ? ordered_json(*report.cycle) : ordered_json(nullptr);
    if (report.witness) {
        auto & w = *report.witness;
        doc["witness"] = {{"source", w.source}, {"a", vertex_list(w.a)}, {"b", vertex_list(w.b)},
            {"cross_edges", w.cross_count}, {"certified", w.certified}};
    } else {
        doc["witness"] = nullptr;
    }
    doc["branch"] = report.branch ? ordered_json(to_string(*report.branch)) : ordered_json(nullptr);
    if (report.partition)
        doc["partition"] = {{"w", vertex_list(*report.partition)}, {"w_complement", vertex_list(report.partition->complement())}};
    else
        doc["partition"] = nullptr;
    auto & c = report.counters;
    doc["counters"] = {{"rotations", c.rotations}, {"extensions", c.extensions}, {"closes", c.closes},
        {"atlas_builds", c.atlas_builds}, {"tier", c.tier}, {"refinement_moves", c.refinement_moves},
        {"absorbed", c.absorbed}, {"oracle_nodes", c.oracle_nodes}, {"preprocess_removed", c.preprocess_removed},
        {"max_degree_loss", c.max_degree_loss}};
    doc["trace"] = ordered_json::array();
    for (auto & s : report.trace)
        doc["trace"].push_back({{"stage", s.stage}, {"status", s.status}, {"detail", s.detail}});
    doc["warnings"] = report.warnings;
    return doc;
}

auto config_to_json(const SolverConfig & config) -> ordered_json
{
    return {{"mu", config.mu}, {"nu", config.nu}, {"eta", config.eta}, {"beta", config.beta},
        {"gamma", config.gamma}, {"min_degree_slack", config.min_degree_slack}, {"depth", config.rotation_depth},
        {"seed", config.seed}, {"oracle_cutoff", config.oracle_cutoff}, {"strict_params", config.strict_params},
        {"oracle_fallback", config.oracle_fallback}, {"random_case1_split", config.random_case1_split},
        {"absorb_budget", config.absorb_budget},
        {"tiers",
            {{"strict", config.tiers.strict}, {"drop_goodness", config.tiers.drop_goodness},
                {"drop_correlation", config.tiers.drop_correlation}, {"plain", config.tiers.plain}}}};
}

auto fnv1a64(const string & bytes) -> std::uint64_t
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace compat
