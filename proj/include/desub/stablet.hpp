#ifndef DESUB_STABLET_HPP
#define DESUB_STABLET_HPP

#include <set>
#include <string>
#include <vector>

#include "desub/directive.hpp"

namespace desub {

/// Letter graph of a substitution set: an edge (alpha, f, beta) whenever the
/// image of beta under f is the single letter alpha. StabLet(S) collects the
/// vertices from which an infinite path leaves; it is empty exactly when the
/// graph has no circuit.
struct StabLetGraph {
    Alphabet alphabet{"ab"};
    struct Edge {
        Letter from, to;
        std::string label;
        bool operator<(const Edge& o) const {
            if (from != o.from) return from < o.from;
            if (to != o.to) return to < o.to;
            return label < o.label;
        }
    };
    std::set<Edge> edges;
    std::set<Letter> stablet;
    bool has_circuit = false;

    std::string to_text() const;
};

StabLetGraph stablet_graph(const SubstitutionSet& s);

/// Letters that can be indefinitely desubstituted along the spec with every
/// image a single letter, computed on the (letter x phase) product graph.
std::set<Letter> stablet_of_directive(const DirectiveSpec& spec);

/// All words p(alpha) with p a prefix composition of the spec and alpha in
/// StabLet of the matching suffix, up to the length bound; deduplicated.
std::set<std::string> stabultlet_bounded(const DirectiveSpec& spec,
                                         std::size_t bound);

/// stabultlet_bounded minus the words that split into two or more factors
/// that are themselves indefinitely desubstitutable along the spec.
std::set<std::string> genstabfin_bounded(const DirectiveSpec& spec,
                                         std::size_t bound);

/// Can the finite nonempty word u be indefinitely desubstituted along the
/// spec (every level a finite nonempty word)? Decided by cycle reachability
/// on (word, phase) states; word lengths never increase, so the state space
/// is finite.
bool stabfin_member(const std::string& u, const DirectiveSpec& spec);

} // namespace desub

#endif
