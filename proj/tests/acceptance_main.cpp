#include <cstdio>

#include "pivlab/acceptance.hpp"

int main() {
    const auto results = pivlab::acceptance::run_all();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        std::printf("[%s] %2d. %s :: %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(),
                    r.detail.c_str());
    }
    std::printf("%s\n", all ? "acceptance: all criteria pass" : "acceptance: FAILURES present");
    return all ? 0 : 1;
}
