#include "bgaps/cutoff3d/cutoff.hpp"

#include <algorithm>
#include <stdexcept>

namespace bgaps::cutoff3d {

const Rational kReferenceI("62082439864241/507343011840");
const Rational kReferenceJ("9933190664926733/40587440947200");

namespace {

const std::map<char, const char*> kReferencePieces{
    {'A',
     "-66+96 x-147 x^2+125 x^3+128 y-122 x y+104 x^2 y-275 y^2+394 y^3+99 z"
     "-58 x z+63 x^2 z-98 y z+51 x y z+41 y^2 z-112 z^2+24 x z^2+72 y z^2+50 z^3"},
    {'B',
     "-41+52 x-73 x^2+25 x^3+108 y-66 x y+71 x^2 y-294 y^2+56 x y^2+363 y^3"
     "+33 z+15 x z+22 x^2 z-40 y z-42 x y z+75 y^2 z-36 z^2-24 x z^2+26 y z^2+20 z^3"},
    {'C', "-22+45 x-35 x^2+63 y-99 x y+82 x^2 y-140 y^2+54 x y^2+179 y^3"},
    {'D', "0"},
    {'E', "-12+8 x+32 y"},
    {'S', "-6+8 x+16 y"},
    {'T', "18-30 x+12 x^2+42 y-20 x y-66 y^2-45 z+34 x z+22 z^2"},
    {'U',
     "94-1823 x+5760 x^2-5128 x^3+54 y-168 x^2 y+105 y^2+1422 x z-2340 x^2 z"
     "-192 y^2 z-128 z^2-268 x z^2+64 z^3"},
    {'G',
     "5274-19833 x+18570 x^2-5128 x^3-18024 y+44696 x y-20664 x^2 y+16158 y^2"
     "-19056 x y^2-4592 y^3-10704 z+26860 x z-12588 x^2 z+24448 y z-30352 x y z"
     "-10980 y^2 z+7240 z^2-9092 x z^2-8288 y z^2-1632 z^3"},
    {'H', "8 z"},
};

Var var_of(char c) { return static_cast<Var>(c - 'x'); }

// "x:0:1/2-eps/2 y:0:x z:x:1-eps-x"
IteratedIntegral block(const std::string& text, const Rational& eps) {
  IteratedIntegral out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find(' ', pos);
    if (end == std::string::npos) end = text.size();
    auto item = text.substr(pos, end - pos);
    auto c1 = item.find(':');
    auto c2 = item.find(':', c1 + 1);
    out.push_back({var_of(item[0]), parse_poly3(item.substr(c1 + 1, c2 - c1 - 1), eps),
                   parse_poly3(item.substr(c2 + 1), eps)});
    pos = end + 1;
  }
  return out;
}

// "A yzx 0 y"
ZSegment segment(const std::string& text, const Rational& eps) {
  auto a = text.find(' ');
  auto b = text.find(' ', a + 1);
  auto c = text.find(' ', b + 1);
  return {text[0], text.substr(a + 1, b - a - 1), parse_poly3(text.substr(b + 1, c - b - 1), eps),
          parse_poly3(text.substr(c + 1), eps)};
}

std::vector<ZSegment> segments(std::initializer_list<const char*> specs, const Rational& eps) {
  std::vector<ZSegment> out;
  for (const char* s : specs) out.push_back(segment(s, eps));
  return out;
}

Poly3 inner_integral(const PiecewiseF& f, const std::vector<ZSegment>& segs) {
  Poly3 total;
  for (const auto& s : segs) total += f.on(s.piece, s.perm).integrate(Z, s.lo, s.hi);
  return total;
}

char classify(const Point3& p, const Rational& eps) {
  const auto& [x, y, z] = p;
  Rational s1 = x + y, s2 = y + z, s3 = z + x;
  Rational lo = 1 - eps, hi = 1 + eps;
  auto between = [](const Rational& a, const Rational& b) { return a < b; };
  if (!(between(s3, lo) || between(lo, s3)) || !(between(s2, lo) || between(lo, s2)) ||
      !(between(s1, lo) || between(lo, s1)) || s3 == hi || s2 == hi || s1 == hi) {
    return 0;
  }
  if (s3 < lo) return 'A';
  if (s3 < hi) {
    if (s2 < lo) return 'B';
    if (s1 < lo) return 'C';
    return 'D';
  }
  if (s2 < lo) return 'E';
  if (s2 < hi) {
    if (s1 > lo) return 'H';
    Rational half = Rational(1, 2);
    if (z == half + eps || x == half - eps) return 0;
    if (z < half + eps) return 'S';
    if (x > half - eps) return 'T';
    return 'U';
  }
  return s1 < lo ? 'G' : 0;
}

}  // namespace

Poly3 PiecewiseF::on(char piece, const std::string& perm) const {
  auto it = pieces.find(piece);
  if (it == pieces.end()) throw std::invalid_argument(std::string("no piece ") + piece);
  return it->second.compose(relabel_arguments(perm));
}

std::optional<Rational> PiecewiseF::at(const Point3& p) const {
  Point3 s = p;
  std::sort(s.begin(), s.end());
  if (s[0] <= 0 || s[0] == s[1] || s[1] == s[2] || s[0] + s[1] + s[2] >= Rational(3, 2)) return std::nullopt;
  Point3 canon{s[1], s[0], s[2]};
  char piece = classify(canon, eps);
  if (!piece) return std::nullopt;
  return pieces.at(piece).eval(canon[0], canon[1], canon[2]);
}

PiecewiseF reference_cutoff() {
  PiecewiseF f;
  for (const auto& [name, text] : kReferencePieces) f.pieces[name] = parse_poly3(text);
  return f;
}

PiecewiseF constant_cutoff(const Rational& c, const Rational& eps) {
  PiecewiseF f;
  f.eps = eps;
  for (char name : kPieceNames) f.pieces[name] = Poly3(c);
  return f;
}

std::map<char, std::vector<IteratedIntegral>> i_limits(const Rational& eps) {
  std::map<char, std::vector<std::string>> text{
      {'A', {"x:0:1/2-eps/2 y:0:x z:x:1-eps-x"}},
      {'B',
       {"z:1/2-eps/2:1/2+eps/2 x:1-eps-z:z y:0:1-eps-z", "z:1/2+eps/2:1-eps x:1-eps-z:1+eps-z y:0:1-eps-z"}},
      {'C',
       {"y:0:1/2-3eps/2 x:y:y+2eps z:1-eps-y:1+eps-x", "y:1/2-3eps/2:1/2-eps x:y:1-eps-y z:1-eps-y:1+eps-x",
        "y:1/2-eps:1/2-eps/2 x:y:1-eps-y z:1-eps-y:3/2-x-y"}},
      {'E', {"z:1/2+eps/2:1-eps x:1+eps-z:z y:0:1-eps-z"}},
      {'S',
       {"y:0:1/2-3eps/2 z:1-eps-y:1/2+eps x:1+eps-z:1-eps-y",
        "y:1/2-3eps/2:1/2-eps z:y+2eps:1/2+eps x:1+eps-z:1-eps-y"}},
      {'T', {"z:1/2+eps:1/2+2eps x:1+eps-z:3/2-z y:0:3/2-x-z", "z:1/2+2eps:1+eps x:1/2-eps:3/2-z y:0:3/2-x-z"}},
      {'U', {"x:0:1/2-eps y:0:x z:1+eps-x:1+eps-y"}},
      {'G', {"x:0:1/2-eps y:0:x z:1+eps-y:3/2-x-y"}},
      {'H',
       {"x:1/2+eps/2:1-eps y:1-eps-x:3/2-2x z:x:3/2-x-y", "x:1-eps:3/4 y:0:3/2-2x z:x:3/2-x-y",
        "x:1/2:1/2+eps/2 y:1-eps-x:1/2-eps z:1+eps-x:3/2-x-y"}},
  };
  std::map<char, std::vector<IteratedIntegral>> out;
  for (const auto& [piece, blocks] : text) {
    for (const auto& b : blocks) out[piece].push_back(block(b, eps));
  }
  return out;
}

Rational integrate_iterated(const Poly3& p, const IteratedIntegral& blk) {
  Poly3 acc = p;
  for (auto it = blk.rbegin(); it != blk.rend(); ++it) acc = acc.integrate(it->var, it->lo, it->hi);
  if (acc.degree() != 0) throw std::logic_error("iterated integral left free variables");
  return acc.coeff({0, 0, 0});
}

std::vector<JRegion> j_regions(const Rational& e) {
  auto blocks = [&](std::initializer_list<const char*> specs) {
    std::vector<IteratedIntegral> out;
    for (const char* s : specs) out.push_back(block(s, e));
    return out;
  };
  return {
      {blocks({"x:0:1/2-eps y:0:x"}),
       segments({"A yzx 0 y", "A zyx y x", "A xyz x 1-eps-x", "B xyz 1-eps-x 1-eps-y", "C xyz 1-eps-y 1+eps-x",
                 "U xyz 1+eps-x 1+eps-y", "G xyz 1+eps-y 3/2-x-y"},
                e)},
      {blocks({"x:1/2-eps:1/2-eps/2 y:1/2-eps:x"}),
       segments({"A yzx 0 y", "A zyx y x", "A xyz x 1-eps-x", "B xyz 1-eps-x 1-eps-y", "C xyz 1-eps-y 3/2-x-y"}, e)},
      {blocks({"x:1/2-eps:1/2-eps/2 y:0:1/2-eps"}),
       segments({"A yzx 0 y", "A zyx y x", "A xyz x 1-eps-x", "B xyz 1-eps-x 1-eps-y", "C xyz 1-eps-y 1+eps-x",
                 "T xyz 1+eps-x 3/2-x-y"},
                e)},
      {blocks({"x:1/2-eps/2:1/2 y:1/2-eps:1-eps-x"}),
       segments({"A yzx 0 y", "A zyx y 1-eps-x", "B zyx 1-eps-x x", "B xyz x 1-eps-y", "C xyz 1-eps-y 3/2-x-y"}, e)},
      {blocks({"x:1/2-eps/2:1/2 y:0:1/2-eps"}),
       segments({"A yzx 0 y", "A zyx y 1-eps-x", "B zyx 1-eps-x x", "B xyz x 1-eps-y", "C xyz 1-eps-y 1+eps-x",
                 "T xyz 1+eps-x 3/2-x-y"},
                e)},
      {blocks({"x:1/2:2eps y:0:1-eps-x", "x:2eps:1/2+eps/2 y:x-2eps:1-eps-x"}),
       segments({"A yzx 0 y", "A zyx y 1-eps-x", "B zyx 1-eps-x x", "B xyz x 1-eps-y", "C xyz 1-eps-y 1+eps-x",
                 "S xyz 1+eps-x 1/2+eps", "T xyz 1/2+eps 3/2-x-y"},
                e)},
      {blocks({"x:2eps:1/2+eps/2 y:0:x-2eps"}),
       segments({"A yzx 0 y", "A zyx y 1-eps-x", "B zyx 1-eps-x x", "B xyz x 1+eps-x", "E xyz 1+eps-x 1-eps-y",
                 "S xyz 1-eps-y 1/2+eps", "T xyz 1/2+eps 3/2-x-y"},
                e)},
      {blocks({"x:1/2+eps/2:1-eps y:0:1-eps-x"}),
       segments({"A yzx 0 y", "A zyx y 1-eps-x", "B zyx 1-eps-x 1+eps-x", "E zyx 1+eps-x x", "E xyz x 1-eps-y",
                 "S xyz 1-eps-y 1/2+eps", "T xyz 1/2+eps 3/2-x-y"},
                e)},
  };
}

std::vector<Marginal> marginal_conditions(const Rational& e) {
  return {
      {"m1", segments({"G yzx 0 3/2-x-y"}, e)},
      {"m2", segments({"G yzx 0 y", "G zyx y 3/2-x-y"}, e)},
      {"m3", segments({"U yzx 0 1+eps-x", "G yzx 1+eps-x y", "G zyx y 3/2-x-y"}, e)},
      {"m4", segments({"U yzx 0 1+eps-x", "G yzx 1+eps-x 3/2-x-y"}, e)},
      {"m5", segments({"T yzx 0 3/2-x-y"}, e)},
      {"m7", segments({"E yzx 0 1-eps-x", "S yzx 1-eps-x 1-eps-y", "H yzx 1-eps-y 3/2-x-y"}, e)},
  };
}

Rational integrate_I(const PiecewiseF& f) {
  Rational total = 0;
  for (const auto& [piece, blocks] : i_limits(f.eps)) {
    Poly3 sq = f.pieces.at(piece) * f.pieces.at(piece);
    for (const auto& b : blocks) total += integrate_iterated(sq, b);
  }
  const auto& d = f.pieces.at('D');
  if (!d.is_zero()) {
    for (const auto& p : build_partition(f.eps)) {
      if (p.piece() == 'D' && p.perm() == "xyz") total += p.integrate(d * d);
    }
  }
  return 6 * total;
}

Rational integrate_J(const PiecewiseF& f) {
  Rational total = 0;
  for (const auto& region : j_regions(f.eps)) {
    Poly3 inner = inner_integral(f, region.segments);
    Poly3 sq = inner * inner;
    for (const auto& b : region.outer) total += integrate_iterated(sq, b);
  }
  return 6 * total;
}

std::vector<std::pair<std::string, Poly3>> check_marginals(const PiecewiseF& f) {
  std::vector<std::pair<std::string, Poly3>> out;
  for (const auto& m : marginal_conditions(f.eps)) out.emplace_back(m.id, inner_integral(f, m.segments));
  return out;
}

PieceReport verify_cutoff(const PiecewiseF& f) {
  PieceReport r;
  r.I = integrate_I(f);
  r.J = integrate_J(f);
  r.marginals = check_marginals(f);
  r.marginals_vanish = std::all_of(r.marginals.begin(), r.marginals.end(), [](const auto& m) { return m.second.is_zero(); });
  r.ratio_above_two = r.J > 2 * r.I;
  return r;
}

bool verify_theorem_piece() {
  auto r = verify_cutoff(reference_cutoff());
  return r.ok() && r.I == kReferenceI && r.J == kReferenceJ;
}

}  // namespace bgaps::cutoff3d
