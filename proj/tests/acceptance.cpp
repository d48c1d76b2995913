// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <cstdio>
#include <string>

#include "cubicbase/verify.hpp"

using namespace cubicbase;

namespace {

bool report(int number, const std::string& label, const SuiteResult& r) {
    int failed = 0;
    for (const Check& c : r.checks)
        if (!c.pass) ++failed;
    std::printf("%s criterion %d: %s (%zu checks, %d failed)\n",
                failed == 0 ? "PASS" : "FAIL", number, label.c_str(),
                r.checks.size(), failed);
    for (const Check& c : r.checks)
        if (!c.pass)
            std::printf("       %s: expected %s, computed %s\n", c.name.c_str(),
                        c.expected.c_str(), c.computed.c_str());
    std::fflush(stdout);
    return failed == 0;
}

SuiteResult filter(const SuiteResult& r, const std::string& needle, bool keep) {
    SuiteResult out{r.suite, {}};
    for (const Check& c : r.checks)
        if ((c.name.find(needle) != std::string::npos) == keep)
            out.checks.push_back(c);
    return out;
}

}  // namespace

int main() {
    bool ok = true;

    ok &= report(1, "exceptional graph table reproduction", run_suite("table1"));

    SuiteResult px = run_suite("px-sweep");
    ok &= report(2, "C(r,s) automorphism group orders", filter(px, "aut order", true));
    ok &= report(3, "C(r,s) base size dichotomy", filter(px, "aut order", false));

    ok &= report(4, "sC(r,s) base size dichotomy", run_suite("spx-sweep"));
    ok &= report(5, "split/merge round trip", run_suite("splitmerge"));
    ok &= report(6, "double coset star condition pairs", run_suite("star"));
    ok &= report(7, "asymmetric colourings of 2-groups", run_suite("colourings"));
    ok &= report(8, "order bound, abelian pairs, distinguishing cost",
                 run_suite("corollaries"));
    ok &= report(9, "fixed point ratio identity", run_suite("fpr"));

    SuiteResult closure = run_suite("closure");
    int failed = 0;
    for (const Check& c : closure.checks)
        if (!c.pass) ++failed;
    std::printf("%s closure: classification of the built-in corpus (%zu checks, %d failed)\n",
                failed == 0 ? "PASS" : "FAIL", closure.checks.size(), failed);
    for (const Check& c : closure.checks)
        if (!c.pass)
            std::printf("       %s: expected %s, computed %s\n", c.name.c_str(),
                        c.expected.c_str(), c.computed.c_str());
    ok &= failed == 0;

    return ok ? 0 : 1;
}
