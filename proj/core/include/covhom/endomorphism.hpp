#ifndef COVHOM_ENDOMORPHISM_HPP
#define COVHOM_ENDOMORPHISM_HPP

#include <vector>

#include "covhom/word.hpp"

namespace covhom {

class AbelianQuotientSpec;
class IntMatrix;

/// Generator-image table for an endomorphism of a free group. Callers assert
/// invertibility; the determinant-±1 abelianization check is the only guard
/// (deciding automorphism-ness outright is out of scope).
class Endomorphism {
 public:
  Endomorphism(int rank, std::vector<Word> images);

  static Endomorphism identity(int rank);
  /// x_target -> c x_target c^{-1}, all other generators fixed.
  static Endomorphism partial_conjugation(int rank, int target, const Word& conjugator);
  /// Inner automorphism w . w^{-1}.
  static Endomorphism inner(int rank, const Word& conjugator);
  /// x_target -> x_target * [x_a, x_b]; requires a, b != target.
  static Endomorphism commutator_transvection(int rank, int target, int a, int b);

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int generator) const;

  Word apply(const Word& w) const;

  /// Row i = exponent vector of the image of x_i.
  IntMatrix abelianization() const;
  /// Abelianization matrix equals the identity (Torelli for the full
  /// abelianization).
  bool is_torelli() const;
  /// Necessary condition for being an automorphism.
  bool abelianization_is_unimodular() const;

  bool operator==(const Endomorphism&) const = default;

 private:
  int rank_ = 0;
  std::vector<Word> images_;
};

/// compose(f, g)(x) = f(g(x)).
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);

/// phi(psi(x_i)) == phi(x_i) for every generator, i.e. psi preserves ker phi
/// and commutes with the deck group of the associated cover.
bool is_torelli_for(const Endomorphism& psi, const AbelianQuotientSpec& phi);

Word apply_endo(const Endomorphism& psi, const Word& w);

}  // namespace covhom

#endif
