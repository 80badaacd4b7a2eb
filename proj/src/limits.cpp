#include "desub/limits.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace desub {

std::string KonigChain::signature() const {
    std::string out(entry.begin(), entry.end());
    out += '|';
    out.append(cycle.begin(), cycle.end());
    return out;
}

Word LimitPoint::prefix(std::size_t n) const {
    if (periodic) return expand(*periodic, n);
    PrefixStream s = stream->clone();
    return s.prefix(n);
}

namespace {

// (letter, level-class) product graph of the first-letter relation.
// Level classes: 0..r-1 walk the preperiod, r..r+s-1 are the period phases.
struct ChainGraph {
    const DirectiveSpec& spec;
    std::size_t na, r, s;

    explicit ChainGraph(const DirectiveSpec& sp)
        : spec(sp),
          na(sp.alphabet().size()),
          r(sp.preperiod_size()),
          s(sp.period_size()) {
        if (s == 0)
            throw Error("this operation needs a directive with a nonempty period");
    }

    std::size_t classes() const { return r + s; }
    std::size_t nodes() const { return classes() * na; }
    std::size_t node(std::size_t letter, std::size_t cls) const {
        return cls * na + letter;
    }
    std::size_t letter_of(std::size_t n) const { return n % na; }
    std::size_t class_of(std::size_t n) const { return n / na; }
    std::size_t next_class(std::size_t cls) const {
        return cls + 1 < r ? cls + 1 : cls + 1 == r ? r : r + ((cls - r + 1) % s);
    }
    const Morphism& morphism_at_class(std::size_t cls) const {
        return spec.at(cls); // preperiod classes coincide with levels; phase
                             // classes repeat the period
    }

    // successors of (alpha, cls): the beta with alpha = first(sigma(beta)).
    std::vector<std::size_t> successors(std::size_t n) const {
        std::size_t cls = class_of(n);
        Letter alpha = spec.alphabet().at(letter_of(n));
        const Morphism& sigma = morphism_at_class(cls);
        std::vector<std::size_t> out;
        for (std::size_t b = 0; b < na; ++b)
            if (sigma.image(spec.alphabet().at(b))[0] == alpha)
                out.push_back(node(b, next_class(cls)));
        return out;
    }
};

constexpr std::size_t kChainCap = 20000;

// Nodes that admit an infinite outgoing path: peel out-degree-0 nodes until
// stable.
std::vector<bool> co_infinite(const ChainGraph& g) {
    std::vector<bool> alive(g.nodes(), true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t n = 0; n < g.nodes(); ++n) {
            if (!alive[n]) continue;
            bool has = false;
            for (std::size_t m : g.successors(n))
                if (alive[m]) { has = true; break; }
            if (!has) {
                alive[n] = false;
                changed = true;
            }
        }
    }
    return alive;
}

// All simple cycles among the surviving phase nodes, each rotated to start
// at its smallest node id.
std::vector<std::vector<std::size_t>> simple_cycles(const ChainGraph& g,
                                                    const std::vector<bool>& alive) {
    std::vector<std::vector<std::size_t>> cycles;
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::size_t> path;
    std::vector<bool> on_path(g.nodes(), false);

    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t start,
                                                             std::size_t cur) {
        if (cycles.size() >= kChainCap) return;
        for (std::size_t nxt : g.successors(cur)) {
            if (!alive[nxt] || nxt < start) continue;
            if (nxt == start) {
                std::vector<std::size_t> cyc = path;
                if (seen.insert(cyc).second) cycles.push_back(cyc);
                continue;
            }
            if (on_path[nxt]) continue;
            on_path[nxt] = true;
            path.push_back(nxt);
            walk(start, nxt);
            path.pop_back();
            on_path[nxt] = false;
        }
    };

    for (std::size_t n = 0; n < g.nodes(); ++n) {
        if (!alive[n] || g.class_of(n) < g.r) continue;
        path = {n};
        on_path.assign(g.nodes(), false);
        on_path[n] = true;
        walk(n, n);
    }
    return cycles;
}

bool cycle_is_letter_cycle(const ChainGraph& g, const std::vector<std::size_t>& cyc) {
    for (std::size_t j = 0; j < cyc.size(); ++j) {
        std::size_t cls = g.class_of(cyc[j]);
        std::size_t nxt = cyc[(j + 1) % cyc.size()];
        Letter beta = g.spec.alphabet().at(g.letter_of(nxt));
        if (g.morphism_at_class(cls).image(beta).size() != 1) return false;
    }
    return true;
}

// Two eventually periodic letter sequences coincide iff they agree on a
// prefix of length max(entries) + lcm(cycles).
bool chains_equal(const KonigChain& x, const KonigChain& y) {
    std::size_t e = std::max(x.entry.size(), y.entry.size());
    std::size_t l = std::lcm(x.cycle.size(), y.cycle.size());
    for (std::size_t i = 0; i < e + l; ++i)
        if (x.at(i) != y.at(i)) return false;
    return true;
}

} // namespace

std::vector<KonigChain> konig_chains(const DirectiveSpec& spec) {
    ChainGraph g(spec);
    std::vector<bool> alive = co_infinite(g);
    std::vector<std::vector<std::size_t>> cycles = simple_cycles(g, alive);

    // cycle membership per node
    std::vector<std::vector<std::size_t>> cycles_at(g.nodes());
    for (std::size_t c = 0; c < cycles.size(); ++c)
        for (std::size_t n : cycles[c]) cycles_at[n].push_back(c);

    std::vector<KonigChain> chains;
    std::vector<std::size_t> path;
    std::vector<bool> on_path(g.nodes(), false);

    auto emit = [&](std::size_t at_node) {
        for (std::size_t c : cycles_at[at_node]) {
            if (chains.size() >= kChainCap) return;
            const std::vector<std::size_t>& cyc = cycles[c];
            std::size_t off = 0;
            while (cyc[off] != at_node) ++off;
            KonigChain chain;
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                chain.entry.push_back(g.spec.alphabet().at(g.letter_of(path[i])));
            for (std::size_t i = 0; i < cyc.size(); ++i)
                chain.cycle.push_back(
                    g.spec.alphabet().at(g.letter_of(cyc[(off + i) % cyc.size()])));
            chain.letter_cycle = cycle_is_letter_cycle(g, cyc);
            chains.push_back(std::move(chain));
        }
    };

    std::function<void(std::size_t)> walk = [&](std::size_t cur) {
        if (chains.size() >= kChainCap) return;
        emit(cur);
        for (std::size_t nxt : g.successors(cur)) {
            if (!alive[nxt] || on_path[nxt]) continue;
            on_path[nxt] = true;
            path.push_back(nxt);
            walk(nxt);
            path.pop_back();
            on_path[nxt] = false;
        }
    };

    std::size_t level0_class = g.r > 0 ? 0 : g.r; // phase 0 when no preperiod
    for (std::size_t a = 0; a < g.na; ++a) {
        std::size_t v = g.node(a, level0_class);
        if (!alive[v]) continue;
        path = {v};
        on_path.assign(g.nodes(), false);
        on_path[v] = true;
        walk(v);
    }

    // Deterministic order: periodic chains first, then by signature; drop
    // duplicates denoting the same letter sequence.
    std::sort(chains.begin(), chains.end(), [](const KonigChain& x, const KonigChain& y) {
        if (x.letter_cycle != y.letter_cycle) return x.letter_cycle;
        return x.signature() < y.signature();
    });
    std::vector<KonigChain> unique;
    for (const auto& c : chains) {
        bool dup = false;
        for (const auto& u : unique)
            if (u.letter_cycle == c.letter_cycle && chains_equal(u, c)) {
                dup = true;
                break;
            }
        if (!dup) unique.push_back(c);
    }
    return unique;
}

LimitPoint limit_point_of_chain(const DirectiveSpec& spec, const KonigChain& chain) {
    LimitPoint out;
    out.chain = chain;
    if (chain.letter_cycle) {
        // The ultimate value of sigma_1..sigma_n(a_n): constant once the
        // cycle is reached, a finite word u; the limit point is u^omega.
        std::size_t e = chain.entry.size();
        std::string u(1, chain.at(e));
        for (std::size_t k = e; k > 0; --k) u = spec.at(k - 1).apply(u);
        out.periodic =
            EventuallyPeriodicWord(spec.alphabet(), "", u).normalized();
        return out;
    }
    DirectiveSpec spec_copy = spec;
    KonigChain chain_copy = chain;
    std::size_t lap = std::max<std::size_t>(chain.cycle.size(), 1);
    std::size_t entry = chain.entry.size();
    out.stream = PrefixStream(
        spec.alphabet(), "directive " + spec.to_text() + " chain " + chain.signature(),
        [spec_copy, chain_copy, lap, entry](std::string& buf, std::size_t need) {
            std::size_t m = entry + lap;
            std::size_t cap_levels = entry + lap * (need + 2);
            while (true) {
                std::string w(1, chain_copy.at(m));
                for (std::size_t k = m; k > 0; --k)
                    w = spec_copy.at(k - 1).apply_prefix(w, need);
                if (w.size() >= need || m > cap_levels) {
                    if (w.size() < need)
                        throw Error("expanding chain failed to reach the "
                                    "requested prefix length");
                    buf = std::move(w);
                    return;
                }
                m *= 2;
            }
        });
    return out;
}

std::vector<LimitPoint> limit_points(const DirectiveSpec& spec) {
    std::vector<LimitPoint> out;
    for (const auto& chain : konig_chains(spec)) {
        LimitPoint lp = limit_point_of_chain(spec, chain);
        bool dup = false;
        if (lp.is_periodic())
            for (const auto& prev : out)
                if (prev.is_periodic() && *prev.periodic == *lp.periodic) {
                    dup = true;
                    break;
                }
        if (!dup) out.push_back(std::move(lp));
    }
    if (out.empty())
        throw Error("internal: directive sequence with no limit point");
    return out;
}

KonigChain default_chain(const DirectiveSpec& spec) {
    std::vector<KonigChain> chains = konig_chains(spec);
    if (chains.empty()) throw Error("internal: no Konig chain");
    return chains.front(); // periodic chains sort first, then by signature
}

} // namespace desub
