#ifndef NCGDIH_TESTS_SUPPORT_HPP
#define NCGDIH_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "ncgdih/group_ring.hpp"

namespace ncgdih::testing {

inline DihedralWord random_word(std::mt19937_64& rng, long max_pow = 20) {
  std::uniform_int_distribution<long> pow(-max_pow, max_pow);
  std::uniform_int_distribution<int> flip(0, 1);
  return DihedralWord{pow(rng), flip(rng)};
}

inline SemidirectPair random_pair(std::mt19937_64& rng, long max_pow = 20) {
  std::uniform_int_distribution<long> p(-max_pow, max_pow);
  return SemidirectPair{p(rng), p(rng)};
}

inline CRat random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6);
  std::uniform_int_distribution<long> den(1, 4);
  return CRat{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

inline DihedralRing random_dihedral_ring(std::mt19937_64& rng,
                                         int max_terms = 4,
                                         long max_pow = 8) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  DihedralRing out;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    out.add_term(random_word(rng, max_pow), random_scalar(rng));
  return out;
}

inline SemidirectRing random_semidirect_ring(std::mt19937_64& rng,
                                             int max_terms = 4,
                                             long max_pow = 8) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  SemidirectRing out;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i)
    out.add_term(random_pair(rng, max_pow), random_scalar(rng));
  return out;
}

/// Independent normal-form oracle for the dihedral group: words as token
/// strings over {S, S^-1, e}, rewritten with e e -> 1, e S -> S^-1 e,
/// e S^-1 -> S e until e's sit at the right, then S-powers are summed.
inline DihedralWord dihedral_oracle_mul(const DihedralWord& a,
                                        const DihedralWord& b) {
  // token: +1 = S, -1 = S^-1, 0 = e
  std::vector<int> tokens;
  auto push_word = [&](const DihedralWord& w) {
    for (long i = 0; i < std::labs(w.power); ++i)
      tokens.push_back(w.power > 0 ? 1 : -1);
    if (w.flip) tokens.push_back(0);
  };
  push_word(a);
  push_word(b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
      if (tokens[i] == 0 && tokens[i + 1] == 0) {
        tokens.erase(tokens.begin() + i, tokens.begin() + i + 2);
        changed = true;
        break;
      }
      if (tokens[i] == 0 && tokens[i + 1] != 0) {  // e S^k -> S^-k e
        std::swap(tokens[i], tokens[i + 1]);
        tokens[i] = -tokens[i];
        changed = true;
        break;
      }
      if (tokens[i] != 0 && tokens[i + 1] == -tokens[i]) {  // S S^-1 -> 1
        tokens.erase(tokens.begin() + i, tokens.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  long power = 0;
  int flip = 0;
  for (int t : tokens) {
    if (t == 0)
      flip ^= 1;
    else
      power += t;
  }
  return DihedralWord{power, flip};
}

}  // namespace ncgdih::testing

#endif  // NCGDIH_TESTS_SUPPORT_HPP
