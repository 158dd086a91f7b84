#include "cantorlab/clopen.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace cantorlab {

namespace {

void require_enumerable(std::size_t n, const char* what)
{
    if (n > max_enumerable_length)
        throw Error(std::string(what) + ": word length " + std::to_string(n) + " exceeds " +
                    std::to_string(max_enumerable_length));
}

std::pair<ClopenSet, ClopenSet> common_length(const ClopenSet& a, const ClopenSet& b)
{
    const std::size_t n = std::max(a.length(), b.length());
    return {refine(a, n), refine(b, n)};
}

} // namespace

ClopenSet::ClopenSet(std::size_t n, std::vector<Word> words) : n_(n), words_(std::move(words))
{
    if (n_ > max_word_length)
        throw Error("word length " + std::to_string(n_) + " exceeds " +
                    std::to_string(max_word_length));
    const Word limit = Word{1} << n_;
    for (Word w : words_) {
        if (w >= limit)
            throw Error("word does not fit in " + std::to_string(n_) + " coordinates");
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

ClopenSet ClopenSet::full(std::size_t n)
{
    require_enumerable(n, "full");
    std::vector<Word> words(std::size_t{1} << n);
    for (std::size_t w = 0; w < words.size(); ++w)
        words[w] = w;
    return ClopenSet(n, std::move(words));
}

ClopenSet ClopenSet::from_strings(std::size_t n, std::span<const std::string> words)
{
    std::vector<Word> packed;
    packed.reserve(words.size());
    for (const auto& s : words) {
        if (s.size() != n)
            throw Error("word \"" + s + "\" does not have length " + std::to_string(n));
        packed.push_back(word_from_string(s));
    }
    return ClopenSet(n, std::move(packed));
}

ClopenSet ClopenSet::coordinate(std::size_t i, std::size_t n)
{
    if (i == 0 || i > n)
        throw Error("coordinate " + std::to_string(i) + " needs ambient length >= it (got " +
                    std::to_string(n) + ")");
    std::vector<Word> words;
    for (Word prefix = 0; prefix < (Word{1} << (i - 1)); ++prefix)
        words.push_back((prefix << 1) | 1);
    return refine(ClopenSet(i, std::move(words)), n);
}

bool ClopenSet::contains(Word w) const
{
    return std::binary_search(words_.begin(), words_.end(), w);
}

std::vector<std::string> ClopenSet::word_strings() const
{
    std::vector<std::string> out;
    out.reserve(words_.size());
    for (Word w : words_)
        out.push_back(word_to_string(w, n_));
    return out;
}

std::string word_to_string(Word w, std::size_t n)
{
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
        if ((w >> (n - 1 - i)) & 1U)
            s[i] = '1';
    }
    return s;
}

Word word_from_string(const std::string& s)
{
    if (s.size() > max_word_length)
        throw Error("word longer than " + std::to_string(max_word_length));
    Word w = 0;
    for (char c : s) {
        if (c != '0' && c != '1')
            throw Error("word \"" + s + "\" contains a character other than 0/1");
        w = (w << 1U) | static_cast<Word>(c == '1');
    }
    return w;
}

std::size_t weight(Word w)
{
    return static_cast<std::size_t>(std::popcount(w));
}

ClopenSet refine(const ClopenSet& a, std::size_t n)
{
    if (n < a.length())
        throw Error("refine: cannot shorten words from " + std::to_string(a.length()) + " to " +
                    std::to_string(n));
    const std::size_t extra = n - a.length();
    if (extra == 0)
        return a;
    require_enumerable(extra, "refine");
    std::vector<Word> out;
    out.reserve(a.size() << extra);
    for (Word w : a.words()) {
        for (Word tail = 0; tail < (Word{1} << extra); ++tail)
            out.push_back((w << extra) | tail);
    }
    return ClopenSet(n, std::move(out));
}

ClopenSet set_union(const ClopenSet& a, const ClopenSet& b)
{
    auto [x, y] = common_length(a, b);
    std::vector<Word> out;
    std::set_union(x.words().begin(), x.words().end(), y.words().begin(), y.words().end(),
                   std::back_inserter(out));
    return ClopenSet(x.length(), std::move(out));
}

ClopenSet set_intersection(const ClopenSet& a, const ClopenSet& b)
{
    auto [x, y] = common_length(a, b);
    std::vector<Word> out;
    std::set_intersection(x.words().begin(), x.words().end(), y.words().begin(), y.words().end(),
                          std::back_inserter(out));
    return ClopenSet(x.length(), std::move(out));
}

ClopenSet set_difference(const ClopenSet& a, const ClopenSet& b)
{
    auto [x, y] = common_length(a, b);
    std::vector<Word> out;
    std::set_difference(x.words().begin(), x.words().end(), y.words().begin(), y.words().end(),
                        std::back_inserter(out));
    return ClopenSet(x.length(), std::move(out));
}

ClopenSet complement(const ClopenSet& a)
{
    return set_difference(ClopenSet::full(a.length()), a);
}

PartitionForm measure_form(const ClopenSet& a)
{
    std::vector<Integer> counts(a.length() + 1);
    for (Word w : a.words())
        ++counts[weight(w)];
    return PartitionForm(a.length(), std::move(counts));
}

IntPoly measure_poly(const ClopenSet& a)
{
    return expand(measure_form(a));
}

ClopenSet realize(const PartitionForm& f)
{
    const std::size_t n = f.level();
    require_enumerable(n, "realize");
    std::vector<std::size_t> wanted(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        wanted[i] = f[i].get_ui();
    std::vector<Word> out;
    for (Word w = 0; w < (Word{1} << n); ++w) {
        auto& left = wanted[weight(w)];
        if (left > 0) {
            out.push_back(w);
            --left;
        }
    }
    return ClopenSet(n, std::move(out));
}

ClopenSet dominated_subset(const ClopenSet& a, const PartitionForm& f)
{
    const std::size_t n = a.length();
    if (f.level() != n)
        throw Error("dominated_subset: form at level " + std::to_string(f.level()) +
                    " but set at length " + std::to_string(n) + " (refine or elevate first)");
    const PartitionForm have = measure_form(a);
    for (std::size_t i = 0; i <= n; ++i) {
        if (f[i] > have[i])
            throw Error("not dominated at this level: weight " + std::to_string(i) + " needs " +
                        f[i].get_str() + " words, set has " + have[i].get_str());
    }
    std::vector<std::size_t> wanted(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        wanted[i] = f[i].get_ui();
    std::vector<Word> out;
    for (Word w : a.words()) {
        auto& left = wanted[weight(w)];
        if (left > 0) {
            out.push_back(w);
            --left;
        }
    }
    return ClopenSet(n, std::move(out));
}

ClopenSet compose_witness(const ClopenSet& b, const ClopenSet& a)
{
    const std::size_t n = b.length();
    const std::size_t m = a.length();
    if (n * m > max_word_length)
        throw Error("compose_witness: n*m = " + std::to_string(n * m) + " exceeds " +
                    std::to_string(max_word_length));
    const ClopenSet outside = complement(a);

    std::unordered_set<Word> seen;
    std::vector<Word> out;
    for (Word e : b.words()) {
        // C_e: block i ranges over A when e_i = 1 and over its complement otherwise.
        std::vector<Word> piece{0};
        for (std::size_t i = 1; i <= n; ++i) {
            const bool one = (e >> (n - i)) & 1U;
            const ClopenSet& block = one ? a : outside;
            std::vector<Word> next;
            next.reserve(piece.size() * block.size());
            for (Word prefix : piece) {
                for (Word w : block.words())
                    next.push_back((prefix << m) | w);
            }
            piece = std::move(next);
        }
        for (Word w : piece) {
            if (!seen.insert(w).second)
                throw std::logic_error("compose_witness: pieces C_e overlap at " +
                                       word_to_string(w, n * m));
            out.push_back(w);
        }
    }
    return ClopenSet(n * m, std::move(out));
}

std::set<IntPoly> measure_spectrum(std::size_t n)
{
    if (n > 4)
        throw Error("measure_spectrum: n = " + std::to_string(n) + " exceeds 4");
    // Each cylinder contributes X^a (1-X)^b directly; this deliberately avoids
    // the partition-form expansion it is compared against.
    std::vector<IntPoly> cylinder(n + 1);
    for (std::size_t a = 0; a <= n; ++a)
        cylinder[a] = pow(IntPoly::x(), a) * pow(IntPoly{1, -1}, n - a);
    const std::size_t words = std::size_t{1} << n;
    std::set<IntPoly> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << words); ++mask) {
        IntPoly measure;
        for (std::size_t w = 0; w < words; ++w) {
            if ((mask >> w) & 1U)
                measure = measure + cylinder[weight(w)];
        }
        out.insert(std::move(measure));
    }
    return out;
}

} // namespace cantorlab
