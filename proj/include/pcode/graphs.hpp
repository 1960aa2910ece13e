#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcode/codes.hpp"

namespace pcode {

/// Simple undirected graph on labelled vertices, adjacency kept as bit rows.
class VertexGraph {
public:
    VertexGraph() = default;
    explicit VertexGraph(std::vector<std::string> labels)
        : labels_(std::move(labels)),
          words_((labels_.size() + 63) / 64),
          rows_(labels_.size() * words_, 0) {}

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& vertex_labels() const { return labels_; }

    void add_edge(std::uint32_t u, std::uint32_t v) {
        require(u != v, ErrorCode::InvalidInput, "no loops");
        rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
    }

    bool adjacent(std::uint32_t u, std::uint32_t v) const {
        return (rows_[u * words_ + v / 64] >> (v % 64)) & 1;
    }

    std::size_t degree_of(std::uint32_t v) const {
        std::size_t d = 0;
        for (std::size_t w = 0; w < words_; ++w) d += std::popcount(rows_[v * words_ + w]);
        return d;
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
        for (std::uint32_t u = 0; u < size(); ++u)
            for (std::uint32_t v = u + 1; v < size(); ++v)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    /// Neighbors of v inside the vertex set marked by `mask` (one bit per
    /// vertex, packed like the rows).
    std::size_t neighbors_in(std::uint32_t v, const std::vector<std::uint64_t>& mask) const {
        std::size_t count = 0;
        for (std::size_t w = 0; w < words_; ++w) count += std::popcount(rows_[v * words_ + w] & mask[w]);
        return count;
    }

    std::vector<std::uint64_t> make_mask(const std::vector<std::uint32_t>& vertices) const {
        std::vector<std::uint64_t> mask(words_, 0);
        for (std::uint32_t v : vertices) mask[v / 64] |= std::uint64_t{1} << (v % 64);
        return mask;
    }

private:
    std::vector<std::string> labels_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;
};

inline std::string to_dot(const VertexGraph& graph, const std::string& name = "G") {
    std::string out = "graph \"" + name + "\" {\n";
    for (std::uint32_t v = 0; v < graph.size(); ++v)
        out += "  v" + std::to_string(v) + " [label=\"" + graph.vertex_labels()[v] + "\"];\n";
    for (auto [u, v] : graph.edges())
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

/// Inverse-closed connection set, possibly tagged with the double-coset
/// classes it was assembled from.
struct ConnectionSet {
    std::vector<Permutation> elements;
    std::vector<std::string> class_labels;
};

enum class CodeMode { Literal, Independent };

/// Vertices are the elements of G in canonical order; g ~ h iff hg^-1 lies in
/// the connection set (edges {g, sg}).
inline VertexGraph cayley_graph(const PermGroup& G, const std::vector<Permutation>& S) {
    std::vector<bool> in_S(G.order(), false);
    for (const auto& s : S) {
        auto idx = G.find_index(s);
        require(idx.has_value(), ErrorCode::InvalidConnectionSet, "connection set element outside G");
        require(!s.is_identity(), ErrorCode::InvalidConnectionSet,
                "connection set must avoid the identity");
        require(G.contains(s.inverse()), ErrorCode::ElementNotInGroup, "inverse outside G");
        in_S[*idx] = true;
    }
    for (const auto& s : S)
        require(in_S[G.index_of(s.inverse())], ErrorCode::InvalidConnectionSet,
                "connection set is not inverse-closed");

    std::vector<std::string> labels;
    labels.reserve(G.order());
    for (const auto& g : G.elements()) labels.push_back(g.to_cycle_string());
    VertexGraph graph(std::move(labels));
    for (std::uint32_t i = 0; i < G.order(); ++i) {
        for (std::uint32_t j = i + 1; j < G.order(); ++j) {
            if (in_S[G.index_of(G.element(j) * G.element(i).inverse())]) graph.add_edge(i, j);
        }
    }
    return graph;
}

/// Vertices are the left cosets of H in G; xH ~ yH iff x^-1 y lies in the
/// H-double-coset saturation HUH of the connection set. U must be
/// inverse-closed and disjoint from H; it is saturated before use.
inline VertexGraph coset_graph(const PermGroup& G, const PermGroup& H,
                               const std::vector<Permutation>& U) {
    require_subgroup(G, H, "coset graph requires H <= G");
    std::vector<bool> in_U(G.order(), false);
    for (const auto& u : U) {
        auto idx = G.find_index(u);
        require(idx.has_value(), ErrorCode::InvalidConnectionSet, "connection set element outside G");
        require(!H.contains(u), ErrorCode::InvalidConnectionSet,
                "connection set must be disjoint from H");
        in_U[*idx] = true;
    }
    for (const auto& u : U)
        require(in_U[G.index_of(u.inverse())], ErrorCode::InvalidConnectionSet,
                "connection set is not inverse-closed");

    // saturate: HUH
    std::vector<bool> saturated(G.order(), false);
    for (std::uint32_t i = 0; i < G.order(); ++i) {
        if (!in_U[i]) continue;
        for (const auto& h1 : H.elements()) {
            Permutation left = h1 * G.element(i);
            for (const auto& h2 : H.elements()) saturated[G.index_of(left * h2)] = true;
        }
    }

    CosetDecomposition cosH = left_cosets(G, H);
    std::vector<std::string> labels;
    labels.reserve(cosH.coset_count());
    for (const auto& rep : cosH.representatives()) labels.push_back(rep.to_cycle_string() + "H");
    VertexGraph graph(std::move(labels));
    for (std::uint32_t i = 0; i < cosH.coset_count(); ++i) {
        Permutation xi = cosH.representative(i).inverse();
        for (std::uint32_t j = i + 1; j < cosH.coset_count(); ++j) {
            if (saturated[G.index_of(xi * cosH.representative(j))]) graph.add_edge(i, j);
        }
    }
    return graph;
}

/// Literal mode: every vertex outside C has exactly one neighbor in C.
/// Independent mode additionally forbids edges inside C.
inline bool is_perfect_code_in_graph(const VertexGraph& graph,
                                     const std::vector<std::uint32_t>& C,
                                     CodeMode mode = CodeMode::Literal) {
    std::vector<bool> in_C(graph.size(), false);
    for (std::uint32_t v : C) {
        require(v < graph.size(), ErrorCode::InvalidInput, "code vertex out of range");
        in_C[v] = true;
    }
    auto mask = graph.make_mask(C);
    for (std::uint32_t v = 0; v < graph.size(); ++v) {
        std::size_t count = graph.neighbors_in(v, mask);
        if (!in_C[v]) {
            if (count != 1) return false;
        } else if (mode == CodeMode::Independent && count != 0) {
            return false;
        }
    }
    return true;
}

/// Search every inverse-closed union of H-double-coset classes of G \ H for
/// one whose coset graph makes the H-cosets inside A a perfect code.
///
/// The 2^k subsets are walked in reflected-Gray-code order so the per-vertex
/// neighbor counts are updated incrementally (one class toggled per step);
/// the first success along that walk is returned, then rebuilt as an explicit
/// coset graph and re-verified literally. Returns nothing when all subsets
/// fail.
inline std::optional<ConnectionSet> find_witness_connection_set(
    const PairInstance& inst, CodeMode mode = CodeMode::Literal,
    std::size_t max_classes = 20) {
    const PermGroup& G = inst.G;
    const CosetDecomposition& cosH = inst.cosets_H_in_G;

    std::vector<DoubleCosetUnion> classes;
    for (const auto& dc : double_coset_union_classes(G, inst.H, cosH)) {
        if (inst.H.contains(dc.seed)) continue; // the class of H itself is never in U
        classes.push_back(dc);
    }
    const std::size_t k = classes.size();
    require(k <= max_classes, ErrorCode::TooManyDoubleCosetClasses,
            std::to_string(k) + " double-coset classes exceed the limit of " +
                std::to_string(max_classes));

    // class id of each left H-coset of G (or -1 for cosets inside H's class)
    std::vector<std::int32_t> class_of_coset(cosH.coset_count(), -1);
    for (std::size_t c = 0; c < k; ++c)
        for (std::uint32_t id : classes[c].cosets) class_of_coset[id] = static_cast<std::int32_t>(c);

    // vertices = left H-cosets; C = those inside A
    std::vector<std::uint32_t> C;
    std::vector<bool> in_C(cosH.coset_count(), false);
    for (std::uint32_t v = 0; v < cosH.coset_count(); ++v) {
        if (inst.A.contains(cosH.representative(v))) {
            C.push_back(v);
            in_C[v] = true;
        }
    }

    // profile[v][c] = number of C-cosets reached from v through class c
    std::vector<std::vector<std::int32_t>> profile(cosH.coset_count(),
                                                   std::vector<std::int32_t>(k, 0));
    for (std::uint32_t v = 0; v < cosH.coset_count(); ++v) {
        Permutation xi = cosH.representative(v).inverse();
        for (std::uint32_t a : C) {
            if (a == v) continue;
            std::int32_t c = class_of_coset[cosH.coset_of(G.index_of(xi * cosH.representative(a)))];
            if (c >= 0) ++profile[v][c];
        }
    }

    auto accepted = [&](const std::vector<std::int32_t>& count) {
        for (std::uint32_t v = 0; v < cosH.coset_count(); ++v) {
            if (!in_C[v]) {
                if (count[v] != 1) return false;
            } else if (mode == CodeMode::Independent && count[v] != 0) {
                return false;
            }
        }
        return true;
    };

    std::vector<std::int32_t> count(cosH.coset_count(), 0);
    std::optional<std::uint64_t> found_code;
    std::uint64_t gray = 0;
    const std::uint64_t total = std::uint64_t{1} << k;
    if (accepted(count)) found_code = 0; // the empty connection set
    for (std::uint64_t step = 1; step < total && !found_code; ++step) {
        std::uint64_t next = step ^ (step >> 1);
        std::uint64_t toggled = gray ^ next;
        std::size_t c = static_cast<std::size_t>(std::countr_zero(toggled));
        std::int32_t sign = (next & toggled) ? 1 : -1;
        for (std::uint32_t v = 0; v < cosH.coset_count(); ++v) count[v] += sign * profile[v][c];
        gray = next;
        if (accepted(count)) found_code = gray;
    }
    if (!found_code) return std::nullopt;

    ConnectionSet witness;
    for (std::size_t c = 0; c < k; ++c) {
        if (!(*found_code >> c & 1)) continue;
        witness.class_labels.push_back("H " + classes[c].seed.to_cycle_string() + " H class");
        for (std::uint32_t id : classes[c].cosets)
            for (std::uint32_t m : cosH.members(id)) witness.elements.push_back(G.element(m));
    }
    std::sort(witness.elements.begin(), witness.elements.end());

    // independent literal re-verification through the explicit graph
    VertexGraph graph = coset_graph(G, inst.H, witness.elements);
    require(is_perfect_code_in_graph(graph, C, mode), ErrorCode::ConsistencyViolation,
            "connection-set witness failed graph re-verification");
    return witness;
}

} // namespace pcode
