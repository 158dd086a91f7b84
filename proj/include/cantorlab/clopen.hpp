#pragma once

// Clopen subsets of the Cantor set {0,1}^N, each stored as the finite set of
// length-n words it is a union of cylinders over.
//
// A word packs coordinate 1 into the most significant of its n bits, so the
// numeric order of packed words is the lexicographic order of their 0/1
// strings. Refinement appends coordinates on the right.

#include "cantorlab/intpoly.hpp"
#include "cantorlab/partition.hpp"

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace cantorlab {

using Word = std::uint64_t;

inline constexpr std::size_t max_word_length = 62;
/// Operations that touch every word of the ambient space stop here.
inline constexpr std::size_t max_enumerable_length = 24;

class ClopenSet {
public:
    ClopenSet() = default;
    /// Sorts and deduplicates; throws if a word does not fit in n bits.
    ClopenSet(std::size_t n, std::vector<Word> words);

    static ClopenSet empty(std::size_t n) { return ClopenSet(n, {}); }
    static ClopenSet full(std::size_t n);
    /// Words of length n given as 0/1 strings.
    static ClopenSet from_strings(std::size_t n, std::span<const std::string> words);
    /// The cylinder fixing coordinate i (1-based) to 1, at ambient length n >= i.
    static ClopenSet coordinate(std::size_t i, std::size_t n);

    std::size_t length() const { return n_; }
    std::span<const Word> words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    bool contains(Word w) const;
    std::vector<std::string> word_strings() const;

    friend bool operator==(const ClopenSet&, const ClopenSet&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Word> words_;
};

std::string word_to_string(Word w, std::size_t n);
Word word_from_string(const std::string& s);
std::size_t weight(Word w);

/// Same set over n' >= n coordinates.
ClopenSet refine(const ClopenSet& a, std::size_t n);

ClopenSet set_union(const ClopenSet& a, const ClopenSet& b);
ClopenSet set_intersection(const ClopenSet& a, const ClopenSet& b);
ClopenSet set_difference(const ClopenSet& a, const ClopenSet& b);
ClopenSet complement(const ClopenSet& a);

/// a_i = number of words with exactly i ones.
PartitionForm measure_form(const ClopenSet& a);
IntPoly measure_poly(const ClopenSet& a);

/// The set taking, for each weight i, the a_i lexicographically smallest
/// words of that weight.
ClopenSet realize(const PartitionForm& f);

/// B subset of A with measure_form(B) = f, choosing the lexicographically
/// smallest words of A in each weight class. Throws if A and f differ in
/// level or f exceeds measure_form(A) anywhere.
ClopenSet dominated_subset(const ClopenSet& a, const PartitionForm& f);

/// The independent-copies construction for P o Q: with B at length n and A at
/// length m, returns C at length n*m whose measure polynomial is
/// measure_poly(B) composed with measure_poly(A). Throws std::logic_error if
/// two pieces C_e ever overlap.
ClopenSet compose_witness(const ClopenSet& b, const ClopenSet& a);

/// Measure polynomials of all 2^(2^n) subsets of {0,1}^n; n <= 4.
std::set<IntPoly> measure_spectrum(std::size_t n);

} // namespace cantorlab
