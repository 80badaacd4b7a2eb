#include "desub/stablet.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "desub/desub.hpp"

namespace desub {

std::string StabLetGraph::to_text() const {
    std::ostringstream out;
    out << "letters: " << alphabet.letters() << "\n";
    out << "edges:\n";
    for (const auto& e : edges)
        out << "  " << e.from << " <- " << e.to << "  via " << e.label << "\n";
    out << "stablet: {";
    bool first = true;
    for (Letter c : stablet) { if (!first) out << ", "; out << c; first = false; }
    out << "}\n";
    out << (has_circuit ? "graph has a circuit" : "no circuit in the graph") << "\n";
    return out.str();
}

StabLetGraph stablet_graph(const SubstitutionSet& s) {
    StabLetGraph g;
    g.alphabet = s.alphabet;
    const Alphabet& a = s.alphabet;

    // edge alpha -> beta labelled f whenever alpha = f(beta), |f(beta)| = 1
    std::vector<std::vector<std::size_t>> succ(a.size());
    for (const auto& [name, f] : s.members) {
        for (std::size_t b = 0; b < a.size(); ++b) {
            const std::string& im = f.image(a.at(b));
            if (im.size() != 1) continue;
            g.edges.insert({im[0], a.at(b), name});
            succ[a.index(im[0])].push_back(b);
        }
    }

    // vertices with an infinite outgoing path: peel dead ends
    std::vector<bool> alive(a.size(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!alive[i]) continue;
            bool has = false;
            for (std::size_t j : succ[i])
                if (alive[j]) { has = true; break; }
            if (!has) { alive[i] = false; changed = true; }
        }
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        if (alive[i]) g.stablet.insert(a.at(i));
    g.has_circuit = !g.stablet.empty();
    return g;
}

namespace {

// (letter, level-class) walker shared by the directive StabLet analyses:
// classes 0..r-1 walk the preperiod, r..r+s-1 the period phases.
struct PhaseWalk {
    const DirectiveSpec& spec;
    std::size_t na, r, s;

    explicit PhaseWalk(const DirectiveSpec& sp)
        : spec(sp), na(sp.alphabet().size()), r(sp.preperiod_size()),
          s(sp.period_size()) {
        if (s == 0)
            throw Error("this operation needs a directive with a nonempty period");
    }
    std::size_t classes() const { return r + s; }
    std::size_t next(std::size_t cls) const {
        return cls + 1 < r ? cls + 1 : cls + 1 == r ? r : r + ((cls - r + 1) % s);
    }
    const Morphism& at(std::size_t cls) const { return spec.at(cls); }
};

} // namespace

std::set<Letter> stablet_of_directive(const DirectiveSpec& spec) {
    PhaseWalk w(spec);
    const Alphabet& a = spec.alphabet();
    std::size_t n = w.classes() * w.na;
    auto node = [&](std::size_t letter, std::size_t cls) { return cls * w.na + letter; };

    // single-letter-image edges only
    std::vector<std::vector<std::size_t>> succ(n);
    for (std::size_t cls = 0; cls < w.classes(); ++cls) {
        const Morphism& f = w.at(cls);
        for (std::size_t b = 0; b < w.na; ++b) {
            const std::string& im = f.image(a.at(b));
            if (im.size() != 1) continue;
            succ[node(a.index(im[0]), cls)].push_back(node(b, w.next(cls)));
        }
    }
    std::vector<bool> alive(n, true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            bool has = false;
            for (std::size_t j : succ[i])
                if (alive[j]) { has = true; break; }
            if (!has) { alive[i] = false; changed = true; }
        }
    }

    std::set<Letter> out;
    std::size_t level0 = w.r > 0 ? 0 : w.r;
    for (std::size_t i = 0; i < w.na; ++i)
        if (alive[node(i, level0)]) out.insert(a.at(i));
    return out;
}

std::set<std::string> stabultlet_bounded(const DirectiveSpec& spec,
                                         std::size_t bound) {
    PhaseWalk w(spec);
    const Alphabet& a = spec.alphabet();
    std::set<std::string> out;

    // p_m = sigma_1 ... sigma_m with images truncated at bound+1 letters;
    // one extra letter is enough to recognize words that grew past the bound.
    std::vector<std::string> images(w.na);
    for (std::size_t i = 0; i < w.na; ++i) images[i] = std::string(1, a.at(i));

    std::size_t cap = w.r + w.s * (bound * w.na + 2);
    for (std::size_t m = 0; m <= cap; ++m) {
        std::set<Letter> letters = stablet_of_directive(spec.suffix(m));
        for (Letter c : letters) {
            const std::string& word = images[a.index(c)];
            if (word.size() <= bound) out.insert(word);
        }
        // extend the prefix composition by sigma_{m+1}
        const Morphism& sigma = spec.at(m);
        std::vector<std::string> next(w.na);
        bool all_over = true;
        for (std::size_t i = 0; i < w.na; ++i) {
            std::string im;
            for (char c : sigma.image(a.at(i))) {
                im += images[a.index(c)];
                if (im.size() > bound + 1) break;
            }
            if (im.size() > bound + 1) im.resize(bound + 2);
            next[i] = std::move(im);
            if (next[i].size() <= bound) all_over = false;
        }
        images = std::move(next);
        if (all_over) break;
    }
    return out;
}

bool stabfin_member(const std::string& u, const DirectiveSpec& spec) {
    if (u.empty()) return false;
    spec.alphabet().require_word(u, "stabfin_member");
    PhaseWalk w(spec);

    enum class Mark { Unknown, OnStack, Yes, No };
    std::map<std::pair<std::string, std::size_t>, Mark> marks;

    std::function<bool(const std::string&, std::size_t)> reaches =
        [&](const std::string& word, std::size_t cls) -> bool {
        auto key = std::make_pair(word, cls);
        auto it = marks.find(key);
        if (it != marks.end()) {
            if (it->second == Mark::OnStack) return true; // cycle: chain forever
            return it->second == Mark::Yes;
        }
        marks[key] = Mark::OnStack;
        bool ok = false;
        for (const std::string& pre : desubstitute_exact(word, w.at(cls))) {
            if (pre.empty()) continue;
            if (reaches(pre, w.next(cls))) { ok = true; break; }
        }
        marks[key] = ok ? Mark::Yes : Mark::No;
        return ok;
    };
    return reaches(u, w.r > 0 ? 0 : w.r);
}

std::set<std::string> genstabfin_bounded(const DirectiveSpec& spec,
                                         std::size_t bound) {
    std::set<std::string> ult = stabultlet_bounded(spec, bound);
    std::set<std::string> out;
    for (const std::string& u : ult) {
        // removable iff u = v1 v2 ... vk, k >= 2, all vi in StabFin(spec)
        std::size_t n = u.size();
        // best[i] = max number of StabFin factors covering u[0..i)
        std::vector<int> best(n + 1, -1);
        best[0] = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (best[i] < 0) continue;
            for (std::size_t j = i + 1; j <= n; ++j) {
                std::string piece = u.substr(i, j - i);
                if (stabfin_member(piece, spec))
                    best[j] = std::max(best[j], best[i] + 1);
            }
        }
        if (best[n] < 2) out.insert(u);
    }
    return out;
}

} // namespace desub
