// Homotopy classes of self-maps: integer matrices for the torus and
// endomorphisms of Z x| Z for the Klein bottle.

#ifndef SURFBRAID_HOMCLASS_HPP_
#define SURFBRAID_HOMCLASS_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "surfbraid/klein.hpp"
#include "surfbraid/torus.hpp"

namespace surfbraid {

// Columns are the images of (1,0) and (0,1).  Every matrix is a valid class.
struct TorusClass {
  std::int64_t b11 = 0;
  std::int64_t b12 = 0;
  std::int64_t b21 = 0;
  std::int64_t b22 = 0;

  IntPair image10() const { return {b11, b21}; }
  IntPair image01() const { return {b12, b22}; }

  friend bool operator==(const TorusClass&, const TorusClass&) = default;
};

// "b11,b12;b21,b22".  Throws ParseError.
TorusClass parse_torus_class(std::string_view text);
std::string to_string(const TorusClass& c);

using klein::ZxZ;

// h(1,0) = img10, h(0,1) = img01 with img10 img01 img10 img01^-1 = (0,0).
struct KleinHom {
  ZxZ img10;
  ZxZ img01;

  friend bool operator==(const KleinHom&, const KleinHom&) = default;
};

bool satisfies_klein_relation(ZxZ img10, ZxZ img01) noexcept;
// Throws NotAHomomorphism when the relation fails.
KleinHom validate_klein_hom(ZxZ img10, ZxZ img01);
// "(r1,s1),(r2,s2)".  Throws ParseError, or NotAHomomorphism.
KleinHom parse_klein_hom(std::string_view text);
std::string to_string(const KleinHom& h);

enum class HomTag { A, B };
std::string_view to_string(HomTag t);

// A: img10 = (r1, 0), img01 = (r, 2s+1).
// B: img10 = (0, 0),  img01 = (r, 2s); r1 is 0.
struct KleinHomType {
  HomTag tag = HomTag::B;
  std::int64_t r1 = 0;
  std::int64_t r = 0;
  std::int64_t s = 0;

  friend bool operator==(const KleinHomType&, const KleinHomType&) = default;
};

KleinHomType klein_hom_type(const KleinHom& h);

// A: images (r, 0), (i, 2s+1) with r >= 0, i in {0, 1}.
// B: images (0, 0), (r, 2s) with r >= 0; i is 0.
// conjugator c satisfies c h(g) c^-1 = images(g).
struct KleinNormalForm {
  HomTag tag = HomTag::B;
  std::int64_t r = 0;
  std::int64_t i = 0;
  std::int64_t s = 0;
  ZxZ conjugator;

  KleinHom images() const;
  // Parameters only; two normal forms can agree while their conjugators differ.
  bool same_form(const KleinNormalForm& o) const {
    return tag == o.tag && r == o.r && i == o.i && s == o.s;
  }
};

KleinNormalForm klein_normal_form(const KleinHom& h);
std::string to_string(const KleinNormalForm& nf);

// g -> c h(g) c^-1
KleinHom conjugate(const KleinHom& h, ZxZ c);

// True iff both images have even second coordinate, i.e. lie in the image of
// Z^2 -> Z x| Z, (1,0) -> (1,0), (0,1) -> (0,2).
bool lifts_to_torus(const KleinHom& h);

}  // namespace surfbraid

#endif  // SURFBRAID_HOMCLASS_HPP_
