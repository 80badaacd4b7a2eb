#include "desub/desub.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace desub {

namespace {

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

// True when the tail is a proper nonempty prefix of some letter image.
bool tail_is_partial_image(std::string_view tail, const Morphism& sigma) {
    if (tail.empty()) return false;
    const Alphabet& a = sigma.alphabet();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string& im = sigma.image(a.at(i));
        if (im.size() > tail.size() && starts_with(im, tail)) return true;
    }
    return false;
}

} // namespace

std::set<Parse> desubstitute_prefix(const Word& w, const Morphism& sigma) {
    if (w.empty()) throw Error("desubstitute_prefix: word must be nonempty");
    if (w.alphabet() != sigma.alphabet())
        throw Error("desubstitute_prefix: alphabet mismatch");

    const std::string& s = w.str();
    const Alphabet& a = sigma.alphabet();
    std::set<Parse> out;
    std::string stack;

    std::function<void(std::size_t)> walk = [&](std::size_t pos) {
        std::string_view rest(s.data() + pos, s.size() - pos);
        if (rest.empty()) {
            out.insert({stack, pos});
            return;
        }
        if (tail_is_partial_image(rest, sigma)) out.insert({stack, pos});
        for (std::size_t i = 0; i < a.size(); ++i) {
            const std::string& im = sigma.image(a.at(i));
            if (im.size() <= rest.size() && starts_with(rest, im)) {
                stack += a.at(i);
                walk(pos + im.size());
                stack.pop_back();
            }
        }
    };
    walk(0);
    return out;
}

std::set<std::string> desubstitute_exact(std::string_view w, const Morphism& sigma) {
    const Alphabet& a = sigma.alphabet();
    std::set<std::string> out;
    std::string stack;
    std::function<void(std::size_t)> walk = [&](std::size_t pos) {
        if (pos == w.size()) {
            out.insert(stack);
            return;
        }
        std::string_view rest = w.substr(pos);
        for (std::size_t i = 0; i < a.size(); ++i) {
            const std::string& im = sigma.image(a.at(i));
            if (im.size() <= rest.size() && starts_with(rest, im)) {
                stack += a.at(i);
                walk(pos + im.size());
                stack.pop_back();
            }
        }
    };
    walk(0);
    return out;
}

int DesubTree::deepest() const {
    std::function<int(const DesubNode&)> depth_of = [&](const DesubNode& n) {
        int best = n.depth;
        for (const auto& c : n.children) best = std::max(best, depth_of(c));
        return best;
    };
    int best = 0;
    for (const auto& c : children) best = std::max(best, depth_of(c));
    return best;
}

bool DesubTree::has_full_depth_chain() const {
    return deepest() == requested_depth && requested_depth > 0;
}

namespace {

void render_node_indented(const DesubNode& n, std::ostringstream& out) {
    for (int i = 0; i < n.depth; ++i) out << "  ";
    out << n.morphism << " -> " << n.preimage << " (consumed " << n.consumed
        << ")\n";
    for (const auto& c : n.children) render_node_indented(c, out);
}

void render_node_lines(const DesubNode& n, std::ostringstream& out) {
    out << n.depth << "\t" << n.morphism << "\t" << n.preimage << "\t"
        << n.consumed << "\n";
    for (const auto& c : n.children) render_node_lines(c, out);
}

nlohmann::json node_to_json(const DesubNode& n) {
    nlohmann::json j;
    j["depth"] = n.depth;
    j["morphism"] = n.morphism;
    j["preimage"] = n.preimage;
    j["consumed"] = n.consumed;
    j["children"] = nlohmann::json::array();
    for (const auto& c : n.children) j["children"].push_back(node_to_json(c));
    return j;
}

DesubNode node_from_json(const nlohmann::json& j) {
    DesubNode n;
    n.depth = j.at("depth").get<int>();
    n.morphism = j.at("morphism").get<std::string>();
    n.preimage = j.at("preimage").get<std::string>();
    n.consumed = j.at("consumed").get<std::size_t>();
    for (const auto& c : j.at("children")) n.children.push_back(node_from_json(c));
    return n;
}

} // namespace

std::string DesubTree::render_indented() const {
    std::ostringstream out;
    out << "word " << root << (truncated ? " [truncated]" : "") << "\n";
    for (const auto& c : children) render_node_indented(c, out);
    return out.str();
}

std::string DesubTree::render_lines() const {
    std::ostringstream out;
    out << 0 << "\t.\t" << root << "\t" << root.size() << "\n";
    for (const auto& c : children) render_node_lines(c, out);
    return out.str();
}

nlohmann::json DesubTree::to_json() const {
    nlohmann::json j;
    j["root"] = root;
    j["requested_depth"] = requested_depth;
    j["truncated"] = truncated;
    j["node_count"] = node_count;
    j["children"] = nlohmann::json::array();
    for (const auto& c : children) j["children"].push_back(node_to_json(c));
    return j;
}

DesubTree DesubTree::from_json(const nlohmann::json& j) {
    DesubTree t;
    t.root = j.at("root").get<std::string>();
    t.requested_depth = j.at("requested_depth").get<int>();
    t.truncated = j.at("truncated").get<bool>();
    t.node_count = j.at("node_count").get<std::size_t>();
    for (const auto& c : j.at("children")) t.children.push_back(node_from_json(c));
    return t;
}

DesubTree directive_parses(const Word& w, const SubstitutionSet& s, int depth,
                           std::size_t budget) {
    if (depth < 1) throw Error("directive_parses: depth must be >= 1");
    if (w.empty()) throw Error("directive_parses: word must be nonempty");
    SubstitutionSet set = s;
    set.sort_members();

    DesubTree tree;
    tree.root = w.str();
    tree.requested_depth = depth;
    std::size_t used = 0;

    std::function<void(DesubNode&, const std::string&, int)> expand_node =
        [&](DesubNode& parent, const std::string& word, int d) {
            if (d > depth) return;
            for (const auto& [name, sigma] : set.members) {
                std::set<Parse> parses =
                    desubstitute_prefix(Word(w.alphabet(), word), sigma);
                for (const auto& p : parses) {
                    if (p.preimage.empty()) continue;
                    if (used >= budget) {
                        tree.truncated = true;
                        return;
                    }
                    DesubNode child;
                    child.depth = d;
                    child.morphism = name;
                    child.preimage = p.preimage;
                    child.consumed = p.consumed;
                    ++used;
                    expand_node(child, child.preimage, d + 1);
                    parent.children.push_back(std::move(child));
                    if (tree.truncated) return;
                }
            }
        };

    DesubNode pseudo_root;
    pseudo_root.depth = 0;
    expand_node(pseudo_root, w.str(), 1);
    tree.children = std::move(pseudo_root.children);
    tree.node_count = used;
    return tree;
}

std::pair<GeneratorName, std::string> balanced_desub_step(const Word& w) {
    if (w.size() < 2) throw Error("balanced_desub_step: need at least 2 letters");
    if (w.alphabet().size() != 2)
        throw Error("balanced_desub_step: binary alphabet required");
    Letter a = w.alphabet().at(0);
    Letter b = w.alphabet().at(1);
    const std::string& s = w.str();

    bool has_aa = s.find(std::string{a, a}) != std::string::npos;
    bool has_bb = s.find(std::string{b, b}) != std::string::npos;
    if (has_aa && has_bb)
        throw Error("balanced_desub_step: word contains both " +
                    std::string{a, a} + " and " + std::string{b, b} +
                    " so it is not balanced");

    // Row selection; ties (neither square occurs) take the L-row of the
    // first letter.
    GeneratorName gen = GeneratorName::Id();
    Letter first = s[0];
    if (first == a) {
        gen = !has_bb ? GeneratorName::L(a) : GeneratorName::R(b);
    } else if (!has_aa && !has_bb) {
        gen = GeneratorName::L(b);
    } else {
        gen = !has_bb ? GeneratorName::R(a) : GeneratorName::L(b);
    }

    Morphism sigma = resolve(gen, w.alphabet());
    std::set<Parse> parses = desubstitute_prefix(w, sigma);
    if (parses.empty())
        throw Error("balanced_desub_step: table row yields no parse (word not "
                    "balanced?)");
    const Parse* best = nullptr;
    for (const auto& p : parses)
        if (!best || p.consumed > best->consumed ||
            (p.consumed == best->consumed && p.preimage < best->preimage))
            best = &p;
    return {gen, best->preimage};
}

} // namespace desub
