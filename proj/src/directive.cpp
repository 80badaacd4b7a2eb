#include "desub/directive.hpp"

#include <algorithm>
#include <sstream>

namespace desub {

DirectiveSpec::DirectiveSpec(Alphabet alphabet,
                             std::vector<GeneratorName> preperiod,
                             std::vector<GeneratorName> period,
                             const MorphismTable* named)
    : alphabet_(std::move(alphabet)),
      pre_names_(std::move(preperiod)),
      per_names_(std::move(period)) {
    for (const auto& g : pre_names_) pre_.push_back(resolve(g, alphabet_, named));
    for (const auto& g : per_names_) per_.push_back(resolve(g, alphabet_, named));
}

const Morphism& DirectiveSpec::at(std::size_t k) const {
    if (k < pre_.size()) return pre_[k];
    if (per_.empty())
        throw Error("directive exhausted: spec has no period and level " +
                    std::to_string(k) + " was requested");
    return per_[(k - pre_.size()) % per_.size()];
}

const GeneratorName& DirectiveSpec::name_at(std::size_t k) const {
    if (k < pre_names_.size()) return pre_names_[k];
    if (per_names_.empty())
        throw Error("directive exhausted: spec has no period");
    return per_names_[(k - pre_names_.size()) % per_names_.size()];
}

DirectiveSpec::DirectiveSpec(Raw, Alphabet alphabet,
                             std::vector<GeneratorName> pre_names,
                             std::vector<GeneratorName> per_names,
                             std::vector<Morphism> pre, std::vector<Morphism> per)
    : alphabet_(std::move(alphabet)),
      pre_names_(std::move(pre_names)),
      per_names_(std::move(per_names)),
      pre_(std::move(pre)),
      per_(std::move(per)) {}

DirectiveSpec DirectiveSpec::suffix(std::size_t k) const {
    std::vector<GeneratorName> pre_names, per_names;
    std::vector<Morphism> pre, per;
    if (k < pre_names_.size()) {
        pre_names.assign(pre_names_.begin() + static_cast<long>(k), pre_names_.end());
        pre.assign(pre_.begin() + static_cast<long>(k), pre_.end());
        per_names = per_names_;
        per = per_;
    } else if (!per_names_.empty()) {
        std::size_t shift = (k - pre_names_.size()) % per_names_.size();
        for (std::size_t i = 0; i < per_names_.size(); ++i) {
            per_names.push_back(per_names_[(shift + i) % per_names_.size()]);
            per.push_back(per_[(shift + i) % per_.size()]);
        }
    } else {
        throw Error("directive suffix beyond a finite-only spec");
    }
    return DirectiveSpec(Raw{}, alphabet_, std::move(pre_names),
                         std::move(per_names), std::move(pre), std::move(per));
}

DirectiveSpec DirectiveSpec::parse(const Alphabet& alphabet,
                                   std::string_view text,
                                   const MorphismTable* named) {
    std::string buf(text);
    // Make the parenthesis / ^w markers standalone tokens.
    std::string spread;
    for (std::size_t i = 0; i < buf.size(); ++i) {
        if (buf[i] == '(') { spread += " ( "; continue; }
        if (buf[i] == ')') {
            if (i + 2 < buf.size() && buf[i + 1] == '^' &&
                (buf[i + 2] == 'w' || buf[i + 2] == 'W')) {
                spread += " )^w ";
                i += 2;
                continue;
            }
            throw Error("directive period must close with ')^w'");
        }
        spread += buf[i];
    }
    std::istringstream in(spread);
    std::vector<GeneratorName> pre, per;
    bool in_period = false, period_done = false;
    std::string tok;
    while (in >> tok) {
        if (tok == "(") {
            if (in_period || period_done) throw Error("unexpected '(' in directive");
            in_period = true;
        } else if (tok == ")^w") {
            if (!in_period) throw Error("unexpected ')^w' in directive");
            if (per.empty()) throw Error("directive period must not be empty");
            in_period = false;
            period_done = true;
        } else {
            if (period_done)
                throw Error("tokens after the period are not allowed");
            (in_period ? per : pre).push_back(GeneratorName::parse(tok));
        }
    }
    if (in_period) throw Error("directive period not closed with ')^w'");
    return DirectiveSpec(alphabet, std::move(pre), std::move(per), named);
}

std::string DirectiveSpec::to_text() const {
    std::string out = tokens_to_string(pre_names_);
    if (!per_names_.empty()) {
        if (!out.empty()) out += ' ';
        out += "(" + tokens_to_string(per_names_) + ")^w";
    }
    return out;
}

void SubstitutionSet::add(std::string member_name, Morphism m) {
    for (auto& [n, _] : members)
        if (n == member_name)
            throw Error("duplicate member name '" + member_name + "' in set");
    if (!members.empty() && m.alphabet() != alphabet)
        throw Error("set members must share one alphabet");
    members.emplace_back(std::move(member_name), std::move(m));
}

void SubstitutionSet::sort_members() {
    std::sort(members.begin(), members.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
}

} // namespace desub
