#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "braidsig/braid.hpp"
#include "braidsig/goeritz.hpp"
#include "braidsig/report.hpp"
#include "braidsig/seifert.hpp"

namespace braidsig {

struct CheckOutcome {
    InvariantReport report;
    std::vector<std::string> passed; // names of the checks that applied
};

/// Run both pipelines on one word, insist they agree, then check every
/// bound the braid qualifies for. Failures throw: a disagreement or a bound
/// violation would contradict a proven statement, so it is never a warning.
inline CheckOutcome check_word_detail(const BraidWord& w) {
    InvariantReport gl = signature_gl(w);
    InvariantReport sf = signature_seifert(w);
    CheckOutcome out;
    if (gl.sigma != sf.sigma || gl.det != sf.det || gl.nullity != sf.nullity)
        throw PipelineDisagreement("pipelines disagree on " + gl.word +
                                   ": gl(sigma=" + std::to_string(gl.sigma) +
                                   ") vs seifert(sigma=" + std::to_string(sf.sigma) + ")");
    out.passed.push_back("pipeline-agreement");
    out.report = gl;
    out.report.method = "both-agree";

    const long long b1 = gl.b1;
    const long long ns = -gl.sigma;
    if (!(-b1 <= gl.sigma && gl.sigma <= b1))
        throw BoundViolation("sigma out of [-b1, b1] for " + gl.word);
    out.passed.push_back("sigma-range");
    if (b1 >= 1) {
        if (!(8 * ns >= b1 + 1))
            throw BoundViolation("-sigma > b1/8 fails for " + gl.word);
        out.passed.push_back("bound-eighth");
        if (w.strands() <= 4) {
            if (!(2 * ns >= b1 + 1))
                throw BoundViolation("-sigma > b1/2 fails for " + gl.word);
            out.passed.push_back("bound-half");
        }
        if (w.strands() <= 3 && b1 >= 2) {
            if (!(ns >= (b1 + 3) / 2))
                throw BoundViolation("-sigma >= ceil(b1/2 + 1) fails for " + gl.word);
            out.passed.push_back("bound-three-braid");
        }
    }
    return out;
}

inline InvariantReport check_word(const BraidWord& w) { return check_word_detail(w).report; }

struct VerificationSummary {
    int strands = 0;
    int max_length = 0;
    int workers = 1;
    std::uint64_t seed = 0;
    std::uint64_t words_examined = 0;
    std::uint64_t canonical_classes = 0;
    std::map<std::string, std::uint64_t> check_counts;
    std::vector<std::string> violations; // messages; empty iff all checks passed
    bool has_min_ratio = false;          // min of (-sigma)/b1 over b1 >= 1
    long long min_ratio_num = 0;
    long long min_ratio_den = 1;
    std::string min_ratio_witness;
};

namespace detail {

inline bool ratio_less(long long an, long long ad, const std::string& aw,
                       long long bn, long long bd, const std::string& bw) {
    const __int128 lhs = static_cast<__int128>(an) * bd;
    const __int128 rhs = static_cast<__int128>(bn) * ad;
    if (lhs != rhs) return lhs < rhs;
    return aw < bw;
}

struct PartialSummary {
    std::map<std::string, std::uint64_t> counts;
    std::vector<std::string> violations;
    bool has_ratio = false;
    long long rn = 0, rd = 1;
    std::string rw;
    std::vector<InvariantReport> reports;

    void absorb_ratio(long long n, long long d, const std::string& w) {
        if (!has_ratio || ratio_less(n, d, w, rn, rd, rw)) {
            has_ratio = true;
            rn = n; rd = d; rw = w;
        }
    }
};

} // namespace detail

/// Exhaustively verify every positive word on the given strand count up to
/// max_length: pipeline agreement plus every applicable bound, deduplicated
/// by canonical key. The summary is identical for any worker count.
inline VerificationSummary enumerate_and_verify(
    int strands, int max_length, int workers = 1,
    std::uint64_t budget = (1ull << 28), std::uint64_t seed = 0,
    const std::function<void(const InvariantReport&)>& sink = nullptr) {
    if (strands < 2 || strands > 5)
        throw PreconditionViolated("enumeration supports 2..5 strands");
    if (max_length < 0)
        throw PreconditionViolated("max length must be >= 0");
    if (workers < 1) workers = 1;

    // budget check before touching anything big
    {
        std::uint64_t total = 0, pw = 1;
        const std::uint64_t base = static_cast<std::uint64_t>(strands - 1);
        for (int l = 0; l <= max_length; ++l) {
            total += pw;
            if (total > budget)
                throw BudgetExceeded("word count exceeds configured budget");
            if (l < max_length) {
                if (pw > budget / base + 1)
                    throw BudgetExceeded("word count exceeds configured budget");
                pw *= base;
            }
        }
    }

    VerificationSummary sum;
    sum.strands = strands;
    sum.max_length = max_length;
    sum.workers = workers;
    sum.seed = seed;

    std::vector<BraidWord> reps;
    std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
    for (int l = 0; l <= max_length; ++l) {
        std::vector<int> odo(static_cast<std::size_t>(l), 1);
        while (true) {
            ++sum.words_examined;
            BraidWord w(strands, odo);
            CanonicalKey key = canonical_key(w);
            if (seen.insert(key).second)
                reps.emplace_back(strands, key.letters);
            // advance odometer
            int i = l - 1;
            while (i >= 0 && odo[static_cast<std::size_t>(i)] == strands - 1) {
                odo[static_cast<std::size_t>(i)] = 1;
                --i;
            }
            if (i < 0) break;
            ++odo[static_cast<std::size_t>(i)];
        }
    }
    sum.canonical_classes = reps.size();

    const std::size_t nreps = reps.size();
    std::vector<detail::PartialSummary> partials(static_cast<std::size_t>(workers));
    std::atomic<std::size_t> next{0};
    auto work = [&](int wi) {
        detail::PartialSummary& ps = partials[static_cast<std::size_t>(wi)];
        if (sink) ps.reports.resize(nreps);
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= nreps) break;
            try {
                CheckOutcome oc = check_word_detail(reps[i]);
                for (const auto& name : oc.passed) ++ps.counts[name];
                if (oc.report.b1 >= 1)
                    ps.absorb_ratio(-oc.report.sigma, oc.report.b1, oc.report.word);
                if (sink) ps.reports[i] = oc.report;
            } catch (const VerificationFatal& e) {
                ps.violations.push_back(e.what());
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int wi = 0; wi < workers; ++wi)
            pool.emplace_back(work, wi);
        for (auto& t : pool) t.join();
    }

    for (const auto& ps : partials) {
        for (const auto& [k, v] : ps.counts) sum.check_counts[k] += v;
        for (const auto& v : ps.violations) sum.violations.push_back(v);
        if (ps.has_ratio) {
            if (!sum.has_min_ratio ||
                detail::ratio_less(ps.rn, ps.rd, ps.rw,
                                   sum.min_ratio_num, sum.min_ratio_den, sum.min_ratio_witness)) {
                sum.has_min_ratio = true;
                sum.min_ratio_num = ps.rn;
                sum.min_ratio_den = ps.rd;
                sum.min_ratio_witness = ps.rw;
            }
        }
    }
    std::sort(sum.violations.begin(), sum.violations.end());
    if (sum.has_min_ratio) {
        const long long g = std::gcd(sum.min_ratio_num, sum.min_ratio_den);
        if (g > 1) { sum.min_ratio_num /= g; sum.min_ratio_den /= g; }
    }
    if (sink) {
        // deterministic stream order regardless of worker count
        for (std::size_t i = 0; i < nreps; ++i)
            for (const auto& ps : partials)
                if (i < ps.reports.size() && !ps.reports[i].word.empty()) {
                    sink(ps.reports[i]);
                    break;
                }
    }
    return sum;
}

struct FamilyRow {
    FamilyName name;
    int n = 0;
    std::string word;
    int b1 = 0;
    long long neg_sigma = 0;
    int components = 0;
};

/// Compute (-sigma, b1) for the four sharp families and check the closed
/// forms exactly: alpha (4n+2, 8n+2), alpha~ (4n+3, 8n+3), beta (4n+1, 8n+1),
/// beta~ (4n+2, 8n+2); beta~ closures must be knots.
inline std::vector<FamilyRow> verify_families(int n_max) {
    if (n_max < 1)
        throw PreconditionViolated("n_max must be >= 1");
    std::vector<FamilyRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        const FamilyName names[4] = {FamilyName::alpha, FamilyName::alpha_tilde,
                                     FamilyName::beta, FamilyName::beta_tilde};
        const long long want_ns[4] = {4ll * n + 2, 4ll * n + 3, 4ll * n + 1, 4ll * n + 2};
        const int want_b1[4] = {8 * n + 2, 8 * n + 3, 8 * n + 1, 8 * n + 2};
        for (int f = 0; f < 4; ++f) {
            const BraidWord w = family({names[f], n, 1});
            const InvariantReport r = check_word(w);
            FamilyRow row{names[f], n, r.word, r.b1, -r.sigma, r.components};
            if (row.neg_sigma != want_ns[f] || row.b1 != want_b1[f])
                throw FamilyMismatch(std::string(family_name_str(names[f])) + " n=" +
                                     std::to_string(n) + ": got (-sigma, b1) = (" +
                                     std::to_string(row.neg_sigma) + ", " +
                                     std::to_string(row.b1) + ")");
            if (names[f] == FamilyName::beta_tilde && row.components != 1)
                throw FamilyMismatch("beta_tilde n=" + std::to_string(n) +
                                     " closure is not a knot");
            rows.push_back(row);
        }
    }
    return rows;
}

/// -sigma(Delta^{4k} w closure) == -sigma(w closure) + 8k for 3-braids.
inline bool verify_twist_shift(const BraidWord& w, int k) {
    if (w.strands() != 3)
        throw PreconditionViolated("twist shift is a 3-braid statement");
    if (k < 1)
        throw PreconditionViolated("k must be >= 1");
    const long long s0 = check_word(w).sigma;
    const long long sk = check_word(prepend_half_twists(w, 4 * k)).sigma;
    return -sk == -s0 + 8ll * k;
}

/// |sigma(w) - sigma(w with one letter deleted)| <= 1.
inline bool verify_saddle_bound(const BraidWord& w, std::size_t position) {
    const long long s0 = check_word(w).sigma;
    const long long s1 = check_word(delete_letter(w, position)).sigma;
    const long long d = s0 - s1;
    return d <= 1 && d >= -1;
}

struct ResidueReductionEntry {
    int residue = 0;
    std::string word;
    int b1 = 0;
    int smoothed = 0;
    bool generators_once = false;
    bool sigma_checked = false;
    bool sigma_chain_ok = true;
};

struct ResidueReductionReport {
    std::vector<ResidueReductionEntry> entries;
    int best_residue = 0;
    int best_b1 = -1;
    bool betti_bound_ok = false; // exists i with b1(w_i) >= ceil(3 b1 / 4)
    bool all_generators_once = false;
};

/// For each residue class i of generator indices mod 4, smooth all but the
/// leftmost occurrence in that class, and check the reduction facts: some
/// class keeps at least three quarters of b1, every smoothed class retains
/// exactly one occurrence per generator, and (within budget) the signature
/// drops by at most one per smoothed letter.
inline ResidueReductionReport verify_residue_reduction(const BraidWord& w,
                                                       int sigma_budget_b1 = 64) {
    std::vector<char> used(static_cast<std::size_t>(w.strands()) + 1, 0);
    for (int k : w.letters()) used[static_cast<std::size_t>(k)] = 1;
    for (int k = 1; k < w.strands(); ++k)
        if (!used[static_cast<std::size_t>(k)])
            throw PreconditionViolated("every generator must be used at least once");

    const int b1 = betti(w);
    const bool within_budget = b1 <= sigma_budget_b1;
    long long sigma_w = 0;
    if (within_budget) sigma_w = check_word(w).sigma;

    ResidueReductionReport rep;
    rep.all_generators_once = true;
    for (int i = 1; i <= 4; ++i) {
        const BraidWord wi = smooth_residue_class(w, i);
        ResidueReductionEntry e;
        e.residue = i;
        e.word = serialize(wi);
        e.b1 = betti(wi);
        e.smoothed = static_cast<int>(w.length() - wi.length());
        e.generators_once = true;
        std::vector<int> cnt(static_cast<std::size_t>(w.strands()) + 1, 0);
        for (int k : wi.letters()) ++cnt[static_cast<std::size_t>(k)];
        for (int k = 1; k < w.strands(); ++k)
            if (k % 4 == i % 4 && cnt[static_cast<std::size_t>(k)] != 1)
                e.generators_once = false;
        if (within_budget) {
            e.sigma_checked = true;
            const long long sigma_i = check_word(wi).sigma;
            e.sigma_chain_ok = (-sigma_w >= -sigma_i - e.smoothed);
        }
        if (e.b1 > rep.best_b1) {
            rep.best_b1 = e.b1;
            rep.best_residue = i;
        }
        rep.all_generators_once = rep.all_generators_once && e.generators_once;
        rep.entries.push_back(std::move(e));
    }
    rep.betti_bound_ok = (4 * rep.best_b1 >= 3 * b1);
    return rep;
}

/// sigma of a split word equals the sum over its split parts, through both
/// pipelines independently.
inline bool verify_additivity(const BraidWord& w) {
    auto parts = split_decompose(w);
    if (parts.size() < 2)
        throw PreconditionViolated("word does not split");
    long long whole_gl = signature_gl(w).sigma;
    long long whole_sf = signature_seifert(w).sigma;
    long long sum = 0;
    for (const auto& p : parts) {
        const long long pg = signature_gl(p).sigma;
        const long long psf = signature_seifert(p).sigma;
        if (pg != psf) return false;
        sum += pg;
    }
    return whole_gl == sum && whole_sf == sum;
}

/// Deterministic random words for sampled checks.
struct WordSampler {
    std::mt19937_64 rng;

    explicit WordSampler(std::uint64_t seed) : rng(seed) {}

    int uniform(int lo, int hi) { // inclusive, implementation-stable
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    BraidWord word(int strands, int max_len, int min_len = 0) {
        const int l = uniform(min_len, max_len);
        std::vector<int> letters(static_cast<std::size_t>(l));
        for (int& k : letters) k = uniform(1, strands - 1);
        return BraidWord(strands, std::move(letters));
    }

    BraidWord word_all_generators(int strands, int max_len) {
        for (;;) {
            BraidWord w = word(strands, max_len, strands - 1);
            std::vector<char> used(static_cast<std::size_t>(strands), 0);
            for (int k : w.letters()) used[static_cast<std::size_t>(k - 1)] = 1;
            bool all = true;
            for (int k = 0; k + 1 < strands; ++k) all = all && used[static_cast<std::size_t>(k)];
            if (all) return w;
        }
    }
};

} // namespace braidsig
