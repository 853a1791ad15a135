#include "surfbraid/homclass.hpp"

#include "surfbraid/errors.hpp"
#include "surfbraid/text.hpp"

namespace surfbraid {

namespace {

bool odd(std::int64_t n) noexcept { return n % 2 != 0; }

std::int64_t sign_power(std::int64_t s) noexcept { return odd(s) ? -1 : 1; }

}  // namespace

TorusClass parse_torus_class(std::string_view text) {
  auto rows = text::split(text, ';');
  if (rows.size() != 2) {
    throw ParseError("expected 'b11,b12;b21,b22', got '" + std::string(text) + "'");
  }
  auto top = text::split(rows[0], ',');
  auto bottom = text::split(rows[1], ',');
  if (top.size() != 2 || bottom.size() != 2) {
    throw ParseError("expected 'b11,b12;b21,b22', got '" + std::string(text) + "'");
  }
  return {text::parse_int(top[0]), text::parse_int(top[1]), text::parse_int(bottom[0]),
          text::parse_int(bottom[1])};
}

std::string to_string(const TorusClass& c) {
  return std::to_string(c.b11) + "," + std::to_string(c.b12) + ";" + std::to_string(c.b21) +
         "," + std::to_string(c.b22);
}

bool satisfies_klein_relation(ZxZ img10, ZxZ img01) noexcept {
  return img10 * img01 * img10 * klein::inverse(img01) == ZxZ{};
}

KleinHom validate_klein_hom(ZxZ img10, ZxZ img01) {
  if (!satisfies_klein_relation(img10, img01)) {
    throw NotAHomomorphism("(1,0) -> " + klein::to_string(img10) + ", (0,1) -> " +
                           klein::to_string(img01) +
                           " violates the relation u v u v^-1 = 1");
  }
  return {img10, img01};
}

KleinHom parse_klein_hom(std::string_view text) {
  text = text::trim(text);
  std::size_t close = text.find(')');
  if (close == std::string_view::npos) {
    throw ParseError("expected '(r1,s1),(r2,s2)', got '" + std::string(text) + "'");
  }
  std::string_view rest = text::trim(text.substr(close + 1));
  if (rest.empty() || rest.front() != ',') {
    throw ParseError("expected '(r1,s1),(r2,s2)', got '" + std::string(text) + "'");
  }
  ZxZ img10 = klein::parse_zxz(text.substr(0, close + 1));
  ZxZ img01 = klein::parse_zxz(rest.substr(1));
  return validate_klein_hom(img10, img01);
}

std::string to_string(const KleinHom& h) {
  return klein::to_string(h.img10) + "," + klein::to_string(h.img01);
}

std::string_view to_string(HomTag t) { return t == HomTag::A ? "A" : "B"; }

KleinHomType klein_hom_type(const KleinHom& h) {
  if (odd(h.img01.s)) {
    return {HomTag::A, h.img10.r, h.img01.r, (h.img01.s - 1) / 2};
  }
  return {HomTag::B, 0, h.img01.r, h.img01.s / 2};
}

KleinHom KleinNormalForm::images() const {
  if (tag == HomTag::A) {
    return {{r, 0}, {i, 2 * s + 1}};
  }
  return {{0, 0}, {r, 2 * s}};
}

KleinNormalForm klein_normal_form(const KleinHom& h) {
  const KleinHomType t = klein_hom_type(h);
  KleinNormalForm nf;
  nf.tag = t.tag;
  nf.s = t.s;
  if (t.tag == HomTag::B) {
    // (a,b)(r,2s)(a,b)^-1 = ((-1)^b r, 2s)
    nf.r = t.r < 0 ? -t.r : t.r;
    nf.conjugator = t.r < 0 ? ZxZ{0, 1} : ZxZ{0, 0};
    return nf;
  }
  // (a,b)(r1,0)(a,b)^-1 = ((-1)^b r1, 0)
  // (a,b)(r2,2s+1)(a,b)^-1 = (2a + (-1)^b r2, 2s+1)
  const std::int64_t b = t.r1 < 0 ? 1 : 0;
  const std::int64_t flipped = sign_power(b) * t.r;
  nf.r = sign_power(b) * t.r1;
  nf.i = odd(t.r) ? 1 : 0;
  nf.conjugator = {(nf.i - flipped) / 2, b};
  return nf;
}

std::string to_string(const KleinNormalForm& nf) {
  std::string out = "type " + std::string(to_string(nf.tag)) + " r=" + std::to_string(nf.r);
  if (nf.tag == HomTag::A) {
    out += " i=" + std::to_string(nf.i);
  }
  return out + " s=" + std::to_string(nf.s) + " conjugator " + klein::to_string(nf.conjugator);
}

KleinHom conjugate(const KleinHom& h, ZxZ c) {
  const ZxZ ci = klein::inverse(c);
  return {c * h.img10 * ci, c * h.img01 * ci};
}

bool lifts_to_torus(const KleinHom& h) { return !odd(h.img10.s) && !odd(h.img01.s); }

}  // namespace surfbraid
