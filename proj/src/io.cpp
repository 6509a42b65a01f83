#include "lamps/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "lamps/errors.hpp"

namespace lamps {

namespace {

struct LineReader {
    std::istream& in;
    int line_no = 0;

    /// Next non-blank, non-comment line; false at end of stream.
    bool next(std::string& out, char comment) {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line_no;
            size_t k = raw.find_first_not_of(" \t\r");
            if (k == std::string::npos || raw[k] == comment) continue;
            out = raw;
            return true;
        }
        return false;
    }
};

std::vector<long long> split_numbers(const std::string& line, int line_no) {
    std::istringstream ss(line);
    std::vector<long long> out;
    std::string tok;
    while (ss >> tok) {
        try {
            size_t used = 0;
            out.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("expected a number, got '" + tok + "'", line_no);
        }
    }
    return out;
}

void check_edge(int n, long long u, long long v, std::set<std::pair<int, int>>& seen, int line_no) {
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw ParseError("vertex id out of range 0.." + std::to_string(n - 1), line_no);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
    std::pair<int, int> key{int(std::min(u, v)), int(std::max(u, v))};
    if (!seen.insert(key).second)
        throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), line_no);
}

}  // namespace

Graph parse_graph(std::istream& in, Format format) {
    LineReader reader{in};
    std::string line;
    char comment = format == Format::dimacs ? 'c' : '#';
    if (!reader.next(line, comment)) throw ParseError("empty input", reader.line_no);

    long long n = 0, m = 0;
    if (format == Format::dimacs) {
        std::istringstream ss(line);
        std::string p, kind;
        if (!(ss >> p >> kind >> n >> m) || p != "p")
            throw ParseError("expected 'p edge n m'", reader.line_no);
    } else {
        auto nums = split_numbers(line, reader.line_no);
        if (nums.size() != 2) throw ParseError("expected header 'n m'", reader.line_no);
        n = nums[0];
        m = nums[1];
    }
    if (n < 0 || m < 0) throw ParseError("negative count in header", reader.line_no);

    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (long long i = 0; i < m; ++i) {
        if (!reader.next(line, comment))
            throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i),
                             reader.line_no);
        long long u, v;
        if (format == Format::dimacs) {
            std::istringstream ss(line);
            std::string e;
            if (!(ss >> e >> u >> v) || e != "e") throw ParseError("expected 'e u v'", reader.line_no);
            std::string rest;
            if (ss >> rest) throw ParseError("trailing tokens after edge", reader.line_no);
            --u;
            --v;
        } else {
            auto nums = split_numbers(line, reader.line_no);
            if (nums.size() != 2) throw ParseError("expected edge line 'u v'", reader.line_no);
            u = nums[0];
            v = nums[1];
        }
        check_edge(int(n), u, v, seen, reader.line_no);
        edges.push_back({int(u), int(v)});
    }
    if (reader.next(line, comment)) throw ParseError("trailing content after last edge", reader.line_no);
    return Graph(int(n), edges);
}

Graph parse_graph_auto(std::istream& in) {
    std::stringstream buffered;
    buffered << in.rdbuf();
    std::string text = buffered.str();
    size_t k = text.find_first_not_of(" \t\r\n");
    Format format =
        (k != std::string::npos && (text[k] == 'p' || text[k] == 'c')) ? Format::dimacs : Format::edgelist;
    std::istringstream ss(text);
    return parse_graph(ss, format);
}

void write_graph(std::ostream& out, const Graph& g, Format format) {
    if (format == Format::dimacs) {
        out << "p edge " << g.n() << " " << g.m() << "\n";
        for (const Edge& e : g.edges()) out << "e " << e.u + 1 << " " << e.v + 1 << "\n";
    } else {
        out << g.n() << " " << g.m() << "\n";
        for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
    }
}

WeightedGraph parse_weighted_graph(std::istream& in) {
    LineReader reader{in};
    std::string line;
    if (!reader.next(line, '#')) throw ParseError("empty input", reader.line_no);
    auto nums = split_numbers(line, reader.line_no);
    if (nums.size() != 2) throw ParseError("expected header 'n m'", reader.line_no);
    long long n = nums[0], m = nums[1];
    if (n < 0 || m < 0) throw ParseError("negative count in header", reader.line_no);

    std::vector<std::pair<int, int>> edges;
    std::vector<int64_t> weights;
    std::set<std::pair<int, int>> seen;
    for (long long i = 0; i < m; ++i) {
        if (!reader.next(line, '#'))
            throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i),
                             reader.line_no);
        nums = split_numbers(line, reader.line_no);
        if (nums.size() != 3) throw ParseError("expected edge line 'u v w'", reader.line_no);
        if (nums[2] < 0) throw ParseError("negative weight", reader.line_no);
        check_edge(int(n), nums[0], nums[1], seen, reader.line_no);
        edges.push_back({int(nums[0]), int(nums[1])});
        weights.push_back(nums[2]);
    }
    if (reader.next(line, '#')) throw ParseError("trailing content after last edge", reader.line_no);
    return {Graph(int(n), edges), std::move(weights)};
}

void write_weighted_graph(std::ostream& out, const WeightedGraph& wg) {
    out << wg.graph.n() << " " << wg.graph.m() << "\n";
    for (int e = 0; e < wg.graph.m(); ++e)
        out << wg.graph.edge(e).u << " " << wg.graph.edge(e).v << " " << wg.weights[e] << "\n";
}

}  // namespace lamps
