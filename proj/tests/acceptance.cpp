// Acceptance suite: every release criterion, one pass/fail line each.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "braidsig/braidsig.hpp"

namespace bs = braidsig;

namespace {

struct Criterion {
    int number;
    std::string name;
    double limit_seconds;
    std::function<bool(std::string&)> run;
};

int g_failures = 0;

void run_criterion(const Criterion& c) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = c.run(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        ok = false;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
    }
    if (!ok) ++g_failures;
    std::printf("[%2d/10] %s %-24s (%.2fs, limit %.0fs)%s%s\n", c.number,
                ok ? "PASS" : "FAIL", c.name.c_str(), secs, c.limit_seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

bool criterion1(std::string& detail) {
    for (int n = 1; n <= 20; ++n) {
        const bs::BraidWord w(2, std::vector<int>(static_cast<std::size_t>(n) + 1, 1));
        const long long gl = bs::signature_gl(w).sigma;
        const long long sf = bs::signature_seifert(w).sigma;
        if (gl != -n || sf != -n) {
            detail = "n=" + std::to_string(n) + " gl=" + std::to_string(gl) +
                     " seifert=" + std::to_string(sf);
            return false;
        }
    }
    detail = "sigma(T(2,n+1)) = -n for n = 1..20, both pipelines";
    return true;
}

bool criterion2(std::string& detail) {
    const auto rows = bs::verify_families(8); // throws FamilyMismatch on any deviation
    detail = std::to_string(rows.size()) + " family rows exact";
    return rows.size() == 32;
}

bool criterion3(std::string& detail) {
    std::uint64_t classes = 0, words = 0;
    for (int b = 2; b <= 4; ++b) {
        const bs::VerificationSummary s = bs::enumerate_and_verify(b, 10, 8);
        classes += s.canonical_classes;
        words += s.words_examined;
        if (!s.violations.empty()) {
            detail = "violation at strands " + std::to_string(b) + ": " + s.violations.front();
            return false;
        }
    }
    detail = std::to_string(words) + " words in " + std::to_string(classes) +
             " canonical classes, zero disagreements";
    return true;
}

bool criterion4(std::string& detail) {
    std::uint64_t classes = 0;
    const std::pair<int, int> ranges[] = {{4, 12}, {5, 10}, {3, 14}};
    for (auto [b, len] : ranges) {
        const bs::VerificationSummary s = bs::enumerate_and_verify(b, len, 8, 1ull << 31);
        classes += s.canonical_classes;
        if (!s.violations.empty()) {
            detail = "violation at strands " + std::to_string(b) + ": " + s.violations.front();
            return false;
        }
    }
    detail = std::to_string(classes) + " classes, zero bound violations";
    return true;
}

bool criterion5(std::string& detail) {
    bs::WordSampler sampler(0x5eedf00d + 5);
    for (int t = 0; t < 50; ++t) {
        const bs::BraidWord w = sampler.word(3, 8);
        for (int k = 1; k <= 2; ++k)
            if (!bs::verify_twist_shift(w, k)) {
                detail = "failed at " + bs::serialize(w) + " k=" + std::to_string(k);
                return false;
            }
    }
    detail = "50 words, k in {1,2}, exact shift";
    return true;
}

bool criterion6(std::string& detail) {
    bs::WordSampler sampler(0x5eedf00d + 6);
    for (int t = 0; t < 200; ++t) {
        const int b = sampler.uniform(2, 5);
        const bs::BraidWord w = sampler.word(b, 10, 1);
        const std::size_t pos =
            static_cast<std::size_t>(sampler.uniform(0, static_cast<int>(w.length()) - 1));
        if (!bs::verify_saddle_bound(w, pos)) {
            detail = "bound failed at " + bs::serialize(w) + " pos=" + std::to_string(pos);
            return false;
        }
    }
    for (int n = 1; n <= 4; ++n) {
        const bs::BraidWord bt = bs::family({bs::FamilyName::beta_tilde, n, 1});
        const long long s0 = bs::check_word(bt).sigma;
        const long long s1 = bs::check_word(bs::delete_letter(bt, 0)).sigma;
        if (s1 - s0 != 1) {
            detail = "beta~ -> beta deletion not an equality at n=" + std::to_string(n);
            return false;
        }
    }
    detail = "200 deletions within bound; family deletions attain it";
    return true;
}

bool criterion7(std::string& detail) {
    std::vector<bs::BraidWord> words;
    words.push_back(bs::BraidWord(4, {1, 3, 2, 1, 3, 2, 2, 1, 3, 2}));
    bs::WordSampler sampler(0x5eedf00d + 7);
    while (words.size() < 51)
        words.push_back(sampler.word_all_generators(4, 10));
    for (const auto& w : words) {
        const bs::FirstRowReport r = bs::first_row_comparison(w);
        const long long diff = r.sigma_g_beta - r.sigma_g_alpha;
        if (!r.agree_submatrix || diff > 1 || diff < -1) {
            detail = "failed at " + bs::serialize(w);
            return false;
        }
    }
    detail = "51 words: submatrices coincide, |sigma difference| <= 1";
    return true;
}

bool criterion8(std::string& detail) {
    bs::WordSampler sampler(0x5eedf00d + 8);
    for (int t = 0; t < 50; ++t) {
        const int b = sampler.uniform(5, 8);
        const bs::BraidWord w = sampler.word_all_generators(b, 16);
        const bs::ResidueReductionReport r = bs::verify_residue_reduction(w, 0);
        if (!r.betti_bound_ok || !r.all_generators_once) {
            detail = "failed at " + bs::serialize(w);
            return false;
        }
    }
    detail = "50 words: betti bound and one-per-class structure hold";
    return true;
}

bool criterion9(std::string& detail) {
    std::mt19937_64 rng(0x5eedf00d + 9);
    for (int t = 0; t < 1000; ++t) {
        const int n = 1 + static_cast<int>(rng() % 10);
        bs::IntMatrix m(static_cast<std::size_t>(n),
                        std::vector<bs::Int>(static_cast<std::size_t>(n), 0));
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                const int v = -9 + static_cast<int>(rng() % 19u);
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
                m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
            }
        if (!(bs::signature_triple(m) == bs::sturm_inertia(m))) {
            detail = "mismatch at sample " + std::to_string(t);
            return false;
        }
    }
    detail = "1000 matrices, two inertia routes agree";
    return true;
}

bool criterion10(std::string& detail) {
    std::uint64_t words = 0;
    for (int b = 2; b <= 4; ++b) {
        std::vector<int> odo;
        for (int l = 0; l <= 6; ++l) {
            odo.assign(static_cast<std::size_t>(l), 1);
            while (true) {
                const bs::BraidWord w(b, odo);
                ++words;
                bs::PlanarDiagram d(w);
                bs::Coloring col = bs::checkerboard(d);
                bool first = true;
                long long ref = 0;
                for (const bs::Face& f : d.faces()) {
                    if (!col.is_white(f.id)) continue;
                    const bs::GoeritzData g = bs::goeritz(d, col, f.id);
                    const long long v = bs::signature_triple(g.matrix).sigma() - g.mu;
                    if (first) { ref = v; first = false; }
                    else if (v != ref) {
                        detail = "deletion choice changed sigma at " + bs::serialize(w);
                        return false;
                    }
                }
                int i = l - 1;
                while (i >= 0 && odo[static_cast<std::size_t>(i)] == b - 1) {
                    odo[static_cast<std::size_t>(i)] = 1;
                    --i;
                }
                if (i < 0) break;
                ++odo[static_cast<std::size_t>(i)];
            }
        }
    }
    detail = std::to_string(words) + " words, all deletion choices agree";
    return true;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "calibration-anchors", 1.0, criterion1},
        {2, "family-table", 30.0, criterion2},
        {3, "pipeline-agreement", 300.0, criterion3},
        {4, "sharp-bounds", 900.0, criterion4},
        {5, "full-twist-shift", 60.0, criterion5},
        {6, "saddle-bound", 120.0, criterion6},
        {7, "first-row-lemma", 60.0, criterion7},
        {8, "residue-reduction", 60.0, criterion8},
        {9, "inertia-oracle", 120.0, criterion9},
        {10, "deletion-invariance", 120.0, criterion10},
    };
    for (const auto& c : criteria)
        run_criterion(c);
    if (g_failures == 0)
        std::printf("acceptance: all 10 criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
