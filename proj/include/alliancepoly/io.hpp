#ifndef ALLIANCEPOLY_IO_HPP
#define ALLIANCEPOLY_IO_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "alliancepoly/errors.hpp"
#include "alliancepoly/graph.hpp"

namespace alliancepoly {

// Edge-list text format: first line "n m", then m lines "u v" (0-indexed,
// whitespace-separated). Anything after '#' on a line is a comment.
inline Graph parse_edge_list_text(std::istream& in) {
    std::vector<long long> numbers;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long value;
        while (ls >> value) numbers.push_back(value);
        ls.clear();
        std::string junk;
        if (ls >> junk) {
            throw ParseError("edge list: unexpected token \"" + junk + "\"");
        }
    }
    if (numbers.size() < 2) {
        throw ParseError("edge list: missing \"n m\" header");
    }
    long long n = numbers[0], m = numbers[1];
    if (n < 1 || n > kMaxVertices) {
        throw ParseError("edge list: order must be in [1, 64], got " +
                         std::to_string(n));
    }
    if (m < 0 || numbers.size() != static_cast<std::size_t>(2 + 2 * m)) {
        throw ParseError("edge list: expected " + std::to_string(m) +
                         " edges, found " +
                         std::to_string((numbers.size() - 2) / 2));
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (long long i = 0; i < m; ++i) {
        long long u = numbers[2 + 2 * i], v = numbers[3 + 2 * i];
        if (u < 0 || u >= n || v < 0 || v >= n || u == v) {
            throw ParseError("edge list: bad edge " + std::to_string(u) + " " +
                             std::to_string(v));
        }
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return graph_from_edge_list(static_cast<int>(n), edges);
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open edge-list file: " + path);
    try {
        return parse_edge_list_text(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

// One corpus graph, or the reason it could not be read.
struct CorpusEntry {
    std::string id;               // graph6 line or file name
    std::optional<Graph> graph;
    std::string error;            // nonempty iff graph is absent
};

// graph6 corpus: one graph per line; blank lines and '#' comments skipped.
inline std::vector<CorpusEntry> read_graph6_corpus(std::istream& in) {
    std::vector<CorpusEntry> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        CorpusEntry entry;
        entry.id = line;
        try {
            entry.graph = parse_graph6(line);
        } catch (const ParseError& e) {
            entry.error = "line " + std::to_string(line_no) + ": " + e.what();
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

// A corpus path is a graph6 file or a directory of edge-list files
// (read in filename order).
inline std::vector<CorpusEntry> load_corpus_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::is_directory(path)) {
        std::vector<std::string> files;
        for (const auto& entry : fs::directory_iterator(path)) {
            if (entry.is_regular_file()) files.push_back(entry.path().string());
        }
        std::sort(files.begin(), files.end());
        std::vector<CorpusEntry> entries;
        for (const auto& file : files) {
            CorpusEntry entry;
            entry.id = fs::path(file).filename().string();
            try {
                entry.graph = read_edge_list_file(file);
            } catch (const ParseError& e) {
                entry.error = e.what();
            }
            entries.push_back(std::move(entry));
        }
        return entries;
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open corpus: " + path);
    return read_graph6_corpus(in);
}

}  // namespace alliancepoly

#endif
