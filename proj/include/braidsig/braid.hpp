#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "braidsig/errors.hpp"

namespace braidsig {

/// A positive braid word: letters are Artin generator indices in 1..strands-1.
/// Words are immutable values; every transformation returns a fresh word.
class BraidWord {
public:
    BraidWord(int strands, std::vector<int> letters)
        : strands_(strands), letters_(std::move(letters)) {
        if (strands_ < 1)
            throw MalformedToken("strand count must be >= 1");
        for (int k : letters_)
            if (k < 1 || k >= strands_)
                throw GeneratorOutOfRange("generator a" + std::to_string(k) +
                                          " out of range for " + std::to_string(strands_) +
                                          " strands");
    }

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    friend bool operator==(const BraidWord& a, const BraidWord& b) {
        return a.strands_ == b.strands_ && a.letters_ == b.letters_;
    }
    friend bool operator!=(const BraidWord& a, const BraidWord& b) { return !(a == b); }

private:
    int strands_;
    std::vector<int> letters_;
};

/// Permutation induced on strand positions by the word (0-based slots).
struct StrandPermutation {
    std::vector<int> image; // image[i] = slot reached by the strand entering slot i
};

inline StrandPermutation strand_permutation(const BraidWord& w) {
    std::vector<int> p(w.strands());
    std::iota(p.begin(), p.end(), 0);
    for (int k : w.letters())
        std::swap(p[k - 1], p[k]);
    return {p};
}

/// Parse whitespace- or comma-separated tokens "a<k>" or bare integers.
inline BraidWord parse_word(const std::string& text, int strands) {
    std::vector<int> letters;
    std::string tok;
    auto flush = [&]() {
        if (tok.empty()) return;
        std::size_t i = 0;
        if (tok[0] == 'a' || tok[0] == 'A') i = 1;
        if (i >= tok.size())
            throw MalformedToken("malformed token '" + tok + "'");
        for (std::size_t j = i; j < tok.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(tok[j])))
                throw MalformedToken("malformed token '" + tok + "'");
        long k = std::stol(tok.substr(i));
        if (k < 1 || k >= strands)
            throw GeneratorOutOfRange("generator a" + std::to_string(k) +
                                      " out of range for " + std::to_string(strands) +
                                      " strands");
        letters.push_back(static_cast<int>(k));
        tok.clear();
    };
    for (char c : text) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
            flush();
        else
            tok.push_back(c);
    }
    flush();
    return BraidWord(strands, std::move(letters));
}

/// Compact form "B<b>:<k1>,<k2>,..." used by the CLI and result files.
inline std::string serialize(const BraidWord& w) {
    std::ostringstream os;
    os << 'B' << w.strands() << ':';
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i) os << ',';
        os << w.letters()[i];
    }
    return os.str();
}

inline BraidWord parse_serialized(const std::string& text) {
    if (text.size() < 2 || (text[0] != 'B' && text[0] != 'b'))
        throw MalformedToken("expected 'B<strands>:<letters>', got '" + text + "'");
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw MalformedToken("expected ':' in '" + text + "'");
    const std::string head = text.substr(1, colon - 1);
    if (head.empty() || !std::all_of(head.begin(), head.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
        }))
        throw MalformedToken("bad strand count in '" + text + "'");
    int strands = std::stoi(head);
    return parse_word(text.substr(colon + 1), strands);
}

/// First Betti number of the closure's Bennequin surface:
/// l(w) - b + c, where c = 1 + number of unused generators.
inline int betti(const BraidWord& w) {
    std::vector<char> used(static_cast<std::size_t>(w.strands()) + 1, 0);
    for (int k : w.letters()) used[static_cast<std::size_t>(k)] = 1;
    int unused = 0;
    for (int k = 1; k < w.strands(); ++k)
        if (!used[static_cast<std::size_t>(k)]) ++unused;
    return static_cast<int>(w.length()) - w.strands() + 1 + unused;
}

inline int components(const BraidWord& w) {
    auto p = strand_permutation(w).image;
    std::vector<char> seen(p.size(), 0);
    int c = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        ++c;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j]))
            seen[j] = 1;
    }
    return c;
}

/// For positive braids the closure is an unlink exactly when b1 = 0.
inline bool is_unlink_closure(const BraidWord& w) { return betti(w) == 0; }

/// Partition the strand range at every unused generator. Each block is
/// reindexed to start at generator 1; the closure of w is the split union
/// of the block closures.
inline std::vector<BraidWord> split_decompose(const BraidWord& w) {
    std::vector<char> used(static_cast<std::size_t>(w.strands()) + 1, 0);
    for (int k : w.letters()) used[static_cast<std::size_t>(k)] = 1;
    std::vector<BraidWord> parts;
    int start = 1;
    auto emit = [&](int end_strand) {
        std::vector<int> sub;
        for (int k : w.letters())
            if (start <= k && k < end_strand) sub.push_back(k - (start - 1));
        parts.emplace_back(end_strand - start + 1, std::move(sub));
        start = end_strand + 1;
    };
    for (int k = 1; k < w.strands(); ++k)
        if (!used[static_cast<std::size_t>(k)]) emit(k);
    emit(w.strands());
    return parts;
}

inline BraidWord substitute_a3_to_a1(const BraidWord& w) {
    if (w.strands() != 4)
        throw WrongStrandCount("a3 -> a1 substitution requires a 4-braid");
    std::vector<int> out = w.letters();
    for (int& k : out)
        if (k == 3) k = 1;
    return BraidWord(4, std::move(out));
}

inline BraidWord delete_letter(const BraidWord& w, std::size_t position) {
    if (position >= w.length())
        throw IndexOutOfRange("letter position " + std::to_string(position) +
                              " out of range (length " + std::to_string(w.length()) + ")");
    std::vector<int> out = w.letters();
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(position));
    return BraidWord(w.strands(), std::move(out));
}

/// Delta^count . w with Delta = a1 a2 a1, the positive half-twist in B_3.
inline BraidWord prepend_half_twists(const BraidWord& w, int count) {
    if (w.strands() != 3)
        throw WrongStrandCount("half twists are defined on 3-strand words");
    if (count < 0)
        throw PreconditionViolated("half-twist count must be >= 0");
    std::vector<int> out;
    out.reserve(3 * static_cast<std::size_t>(count) + w.length());
    for (int i = 0; i < count; ++i) {
        out.push_back(1); out.push_back(2); out.push_back(1);
    }
    out.insert(out.end(), w.letters().begin(), w.letters().end());
    return BraidWord(3, std::move(out));
}

enum class FamilyName { alpha, alpha_tilde, beta, beta_tilde, torus };

struct FamilySpec {
    FamilyName name;
    int n = 1;
    int m = 1; // torus only
};

inline const char* family_name_str(FamilyName f) {
    switch (f) {
        case FamilyName::alpha: return "alpha";
        case FamilyName::alpha_tilde: return "alpha_tilde";
        case FamilyName::beta: return "beta";
        case FamilyName::beta_tilde: return "beta_tilde";
        case FamilyName::torus: return "torus";
    }
    return "?";
}

inline FamilyName family_name_from(const std::string& s) {
    if (s == "alpha") return FamilyName::alpha;
    if (s == "alpha_tilde" || s == "alpha~") return FamilyName::alpha_tilde;
    if (s == "beta") return FamilyName::beta;
    if (s == "beta_tilde" || s == "beta~") return FamilyName::beta_tilde;
    if (s == "torus") return FamilyName::torus;
    throw UnknownFamily("unknown family '" + s + "'");
}

/// alpha_n = (a1^2 a2^2)^(2n+1), beta_n = (a1 a3 a2^2)^(2n+1), the tilde
/// variants prefix one a2; torus(n,m) = (a1...a_{n-1})^m in B_n.
inline BraidWord family(const FamilySpec& spec) {
    if (spec.n < 1)
        throw UnknownFamily("family index n must be >= 1");
    auto repeat = [](const std::vector<int>& block, int times) {
        std::vector<int> out;
        out.reserve(block.size() * static_cast<std::size_t>(times));
        for (int i = 0; i < times; ++i)
            out.insert(out.end(), block.begin(), block.end());
        return out;
    };
    const int reps = 2 * spec.n + 1;
    switch (spec.name) {
        case FamilyName::alpha:
            return BraidWord(3, repeat({1, 1, 2, 2}, reps));
        case FamilyName::alpha_tilde: {
            std::vector<int> out{2};
            auto body = repeat({1, 1, 2, 2}, reps);
            out.insert(out.end(), body.begin(), body.end());
            return BraidWord(3, std::move(out));
        }
        case FamilyName::beta:
            return BraidWord(4, repeat({1, 3, 2, 2}, reps));
        case FamilyName::beta_tilde: {
            std::vector<int> out{2};
            auto body = repeat({1, 3, 2, 2}, reps);
            out.insert(out.end(), body.begin(), body.end());
            return BraidWord(4, std::move(out));
        }
        case FamilyName::torus: {
            if (spec.m < 1)
                throw UnknownFamily("torus index m must be >= 1");
            std::vector<int> block;
            for (int k = 1; k < spec.n; ++k) block.push_back(k);
            return BraidWord(spec.n, repeat(block, spec.m));
        }
    }
    throw UnknownFamily("unknown family");
}

/// Delete all occurrences except the leftmost of every generator whose index
/// is congruent to i mod 4. The closure of the result is a connected sum of
/// closures of braids on at most 4 strands.
inline BraidWord smooth_residue_class(const BraidWord& w, int i) {
    if (i < 1 || i > 4)
        throw PreconditionViolated("residue class must be in 1..4");
    std::vector<char> seen(static_cast<std::size_t>(w.strands()) + 1, 0);
    std::vector<int> out;
    out.reserve(w.length());
    for (int k : w.letters()) {
        if (k % 4 == i % 4) {
            if (seen[static_cast<std::size_t>(k)]) continue;
            seen[static_cast<std::size_t>(k)] = 1;
        }
        out.push_back(k);
    }
    return BraidWord(w.strands(), std::move(out));
}

inline BraidWord rotate(const BraidWord& w, std::size_t r) {
    if (w.empty()) return w;
    r %= w.length();
    std::vector<int> out(w.letters().begin() + static_cast<std::ptrdiff_t>(r), w.letters().end());
    out.insert(out.end(), w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(r));
    return BraidWord(w.strands(), std::move(out));
}

/// Mirror symmetry a_i -> a_{b-i}; preserves closure link type.
inline BraidWord flip(const BraidWord& w) {
    std::vector<int> out = w.letters();
    for (int& k : out) k = w.strands() - k;
    return BraidWord(w.strands(), std::move(out));
}

/// Comparable key identifying words up to cyclic rotation and flip.
/// Deliberately incomplete canonicalization: a dedup optimization only.
struct CanonicalKey {
    int strands;
    std::vector<int> letters;

    friend bool operator==(const CanonicalKey& a, const CanonicalKey& b) {
        return a.strands == b.strands && a.letters == b.letters;
    }
    friend bool operator<(const CanonicalKey& a, const CanonicalKey& b) {
        if (a.strands != b.strands) return a.strands < b.strands;
        return a.letters < b.letters;
    }
};

inline CanonicalKey canonical_key(const BraidWord& w) {
    const std::size_t l = w.length();
    std::vector<int> best;
    bool have = false;
    for (int f = 0; f < 2; ++f) {
        const std::vector<int> base = f ? flip(w).letters() : w.letters();
        for (std::size_t r = 0; r < std::max<std::size_t>(l, 1); ++r) {
            std::vector<int> cand(base.begin() + static_cast<std::ptrdiff_t>(r % std::max<std::size_t>(l, 1)), base.end());
            cand.insert(cand.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(r % std::max<std::size_t>(l, 1)));
            if (!have || cand < best) {
                best = std::move(cand);
                have = true;
            }
        }
    }
    return {w.strands(), std::move(best)};
}

struct CanonicalKeyHash {
    std::size_t operator()(const CanonicalKey& k) const {
        std::size_t h = static_cast<std::size_t>(k.strands) * 1000003u;
        for (int v : k.letters)
            h = h * 131u + static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
        return h;
    }
};

} // namespace braidsig
