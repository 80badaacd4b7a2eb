#include "desub/fixed_point.hpp"

#include <numeric>
#include <sstream>

namespace desub {

std::string FixedPointReport::to_text() const {
    std::ostringstream out;
    out << "power pi = " << pi << "\n";
    out << "expanding seeds = {";
    bool first = true;
    for (Letter c : expanding_seeds) { if (!first) out << ", "; out << c; first = false; }
    out << "}\nmortal letters = {";
    first = true;
    for (Letter c : mortal_letters) { if (!first) out << ", "; out << c; first = false; }
    out << "}\nfixed point families:\n";
    for (const auto& fam : families) out << "  " << fam << "\n";
    return out.str();
}

FixedPointReport fixed_point_analysis(const Morphism& f) {
    const Alphabet& a = f.alphabet();
    std::vector<Letter> h = first_letter_map(f);

    // Letters on cycles of the first-letter map, with their cycle lengths:
    // i is on a cycle iff iterating h from i returns to i within #A steps.
    std::vector<std::size_t> cycle_len(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::size_t cur = i;
        for (std::size_t steps = 1; steps <= a.size(); ++steps) {
            cur = a.index(h[cur]);
            if (cur == i) {
                cycle_len[i] = steps;
                break;
            }
        }
    }

    FixedPointReport report;
    report.pi = 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (cycle_len[i] > 0) report.pi = std::lcm(report.pi, cycle_len[i]);

    // f^pi on each cycle letter decides expanding vs mortal.
    Morphism fpow = f;
    for (std::size_t k = 1; k < report.pi; ++k) fpow = compose(fpow, f);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (cycle_len[i] == 0) continue;
        Letter c = a.at(i);
        const std::string& im = fpow.image(c);
        if (im.size() == 1)
            report.mortal_letters.insert(c); // im == c: first letter returns to c
        else
            report.expanding_seeds.insert(c);
    }

    std::string mortals(report.mortal_letters.begin(), report.mortal_letters.end());
    if (!report.mortal_letters.empty())
        report.families.push_back("any infinite product over {" + mortals + "}");
    for (Letter cseed : report.expanding_seeds) {
        std::string fam = "lim f^{n*" + std::to_string(report.pi) + "}(" +
                          std::string(1, cseed) + ")";
        if (!report.mortal_letters.empty())
            fam = "u " + fam + " with u any finite word over {" + mortals + "}";
        report.families.push_back(fam);
    }
    return report;
}

ThreeValued is_fixed_by_power(const EventuallyPeriodicWord& w, const Morphism& f) {
    if (w.alphabet() != f.alphabet())
        throw Error("is_fixed_by_power: alphabet mismatch");
    EventuallyPeriodicWord target = w.normalized();
    Morphism fpow = f;
    std::ostringstream mismatches;
    for (std::size_t n = 1; n <= f.alphabet().size(); ++n) {
        if (n > 1) fpow = compose(fpow, f);
        EventuallyPeriodicWord image = fpow.apply(w).normalized();
        if (image == target) return ThreeValued::holds();
        mismatches << (n > 1 ? "; " : "") << "f^" << n << "(w) = "
                   << image.to_text();
    }
    return ThreeValued::fails("no n in 1.." + std::to_string(f.alphabet().size()) +
                              " fixes w: " + mismatches.str());
}

} // namespace desub
