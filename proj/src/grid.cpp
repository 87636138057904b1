#include "lrc/grid.hpp"

namespace lrc {

std::vector<int> lambda0_sample(const Field& f) {
    std::vector<int> out;
    for (int r = 1; r < f.q() && (int)out.size() < 3; ++r) out.push_back(r);
    return out;
}

std::vector<CodeSpec> default_grid() {
    std::vector<CodeSpec> grid;
    for (int p : {2, 3, 5, 7}) {
        for (int m : {1, 2}) {
            const Field& f = field_of(p, m);
            std::vector<int> sample = lambda0_sample(f);
            for (int s : {1, 2}) {
                long ppow = power_long(p, s);
                for (int eta : {1, 2, 3}) {
                    if (gcd_long(eta, p) != 1) continue;
                    for (int lambda0 : sample)
                        for (long i = 1; i < ppow; ++i)
                            grid.push_back(CodeSpec::single(f, eta, s, lambda0, (int)i));
                }
                if (p == 2) continue;
                for (int lambda0 : sample) {
                    if (!f.is_quadratic_residue(lambda0)) continue;
                    for (long i = 0; i <= ppow; ++i)
                        for (long j = i + 1; j <= ppow; ++j)
                            grid.push_back(CodeSpec::pair(f, s, lambda0, (int)i, (int)j));
                }
            }
        }
    }
    return grid;
}

}  // namespace lrc
