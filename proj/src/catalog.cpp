#include "qfl/catalog.hpp"

#include "qfl/extensions.hpp"

#include <algorithm>
#include <stdexcept>

namespace qfl {

namespace {

const std::vector<std::pair<FamilyTag, const char*>> kNames = {
    {FamilyTag::mu1, "mu1"},       {FamilyTag::mu2, "mu2"},
    {FamilyTag::L, "L"},           {FamilyTag::G, "G"},
    {FamilyTag::R1_1m10, "R1_1m10"}, {FamilyTag::R2_1m10, "R2_1m10"},
    {FamilyTag::R1_100, "R1_100"}, {FamilyTag::R2_100, "R2_100"},
    {FamilyTag::R3_100, "R3_100"}, {FamilyTag::R4_100, "R4_100"},
    {FamilyTag::R5_100, "R5_100"}, {FamilyTag::R6_100, "R6_100"},
    {FamilyTag::H1_110, "H1_110"}, {FamilyTag::H2_110, "H2_110"},
    {FamilyTag::H3_110, "H3_110"}, {FamilyTag::H4_110, "H4_110"},
    {FamilyTag::H5_110, "H5_110"}, {FamilyTag::H6_110, "H6_110"},
    {FamilyTag::H1_121, "H1_121"}, {FamilyTag::H2_121, "H2_121"},
    {FamilyTag::H3_121, "H3_121"}, {FamilyTag::H4_121, "H4_121"},
    {FamilyTag::H5_121, "H5_121"}, {FamilyTag::H6_121, "H6_121"},
    {FamilyTag::H7_121, "H7_121"},
};

Scalar param_or(const FamilySpec& spec, const std::string& key, const Scalar& fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

int one_based(int i) { return i - 1; }

// --- nilpotent tables ------------------------------------------------------

AlgebraInstance build_mu(const FamilySpec& spec, bool second) {
  const int n = spec.n;
  if (n < 6) throw std::invalid_argument("mu families need n >= 6");
  AlgebraInstance a(n);
  for (int i = 1; i <= n - 3; i++) a.add_product(one_based(i), 0, one_based(i + 1), Scalar(1));
  if (!second) {
    a.add_product(0, one_based(n - 1), one_based(n), Scalar(1));
  } else {
    a.add_product(0, one_based(n - 1), one_based(2), Scalar(1));
    a.add_product(0, one_based(n - 1), one_based(n), Scalar(1));
    for (int i = 2; i <= n - 3; i++)
      a.add_product(one_based(i), one_based(n - 1), one_based(i + 1), Scalar(1));
  }
  return a;
}

AlgebraInstance build_L(const FamilySpec& spec) {
  const int n = spec.n;
  if (n < 6) throw std::invalid_argument("L(alpha,beta,gamma) needs n >= 6");
  AlgebraInstance a(n);
  for (int i = 1; i <= n - 3; i++) a.add_product(one_based(i), 0, one_based(i + 1), Scalar(1));
  a.add_product(one_based(n - 1), 0, one_based(n), Scalar(1));
  a.add_product(one_based(n - 1), 0, one_based(2), spec.alpha);
  a.add_product(0, one_based(n - 1), one_based(n), spec.beta);
  a.add_product(one_based(n - 1), one_based(n - 1), one_based(n), spec.gamma);
  return a;
}

AlgebraInstance build_G(const FamilySpec& spec) {
  const int n = spec.n;
  if (n < 6) throw std::invalid_argument("G(alpha,beta,gamma) needs n >= 6");
  if (!spec.alpha.is_zero()) {
    if (n % 2 == 0) throw std::invalid_argument("G with alpha != 0 needs odd n");
    if (!spec.alpha.is_one()) throw std::invalid_argument("G needs alpha in {0,1}");
  }
  AlgebraInstance a(n);
  a.add_product(0, 0, 1, Scalar(1));
  for (int i = 3; i <= n - 1; i++) a.add_product(one_based(i), 0, one_based(i + 1), Scalar(1));
  a.add_product(0, 2, 3, Scalar(-1));
  a.add_product(0, 2, 1, spec.beta);
  for (int i = 4; i <= n - 1; i++) a.add_product(0, one_based(i), one_based(i + 1), Scalar(-1));
  a.add_product(2, 2, 1, spec.gamma);
  if (!spec.alpha.is_zero())
    for (int i = 3; i <= n - 1; i++) {
      Scalar sign = (i % 2 == 0) ? spec.alpha : -spec.alpha;
      a.add_product(one_based(i), one_based(n + 2 - i), one_based(n), sign);
    }
  return a;
}

// --- solvable extensions of L(1,-1,0) and L(1,0,0) --------------------------

// shared scaffold: nilradical products on e1..en inside an (n+1)-dim algebra
void put_nilradical(AlgebraInstance& a, const AlgebraInstance& nil) {
  for (auto [i, j] : nil.nonzero_pairs())
    for (const auto& [k, c] : nil.product(i, j)) a.add_product(i, j, k, c);
}

AlgebraInstance build_R_1m10(const FamilySpec& spec, int which) {
  const int n = spec.n;
  if (n < 6) throw std::invalid_argument("R(1,-1,0) extensions need n >= 6");
  FamilySpec nil{FamilyTag::L, n, Scalar(1), Scalar(-1), Scalar(0), {}};
  AlgebraInstance a(n + 1);
  put_nilradical(a, build_L(nil));
  const int x = n;  // 0-based index of the adjoined element
  // [e1,x] = e1 - e_{n-1}; [ei,x] = (i-1) ei; [en,x] = en
  a.add_product(0, x, 0, Scalar(1));
  a.add_product(0, x, one_based(n - 1), Scalar(-1));
  for (int i = 2; i <= n - 2; i++) a.add_product(one_based(i), x, one_based(i), Scalar(i - 1));
  a.add_product(one_based(n), x, one_based(n), Scalar(1));
  // [x,e1] = -e1 + c2 e2 + e_{n-1}; [x,en] = -en
  Scalar c2 = which == 1 ? Scalar(0) : Scalar(1);
  a.add_product(x, 0, 0, Scalar(-1));
  a.add_product(x, 0, 1, c2);
  a.add_product(x, 0, one_based(n - 1), Scalar(1));
  a.add_product(x, one_based(n), one_based(n), Scalar(-1));
  return a;
}

AlgebraInstance build_R_100(const FamilySpec& spec, int which) {
  const int n = spec.n;
  if (n < 6) throw std::invalid_argument("R(1,0,0) extensions need n >= 6");
  FamilySpec nilspec{FamilyTag::L, n, Scalar(1), Scalar(0), Scalar(0), {}};
  AlgebraInstance a(n + 1);
  put_nilradical(a, build_L(nilspec));
  const int x = n;

  if (which == 6) {
    // a1 = 0 branch: [e1,x] = sum a_t e_t + e_{n-1}; diagonal weight 1 on e2..e_{n-1}
    std::vector<Scalar> at(n + 1);  // at[t] for 2..n-2
    for (int t = 2; t <= n - 2; t++) at[t] = param_or(spec, "a" + std::to_string(t), Scalar(0));
    Scalar bn3 = param_or(spec, "b" + std::to_string(n - 3), Scalar(0));
    Scalar bn2 = param_or(spec, "b" + std::to_string(n - 2), Scalar(0));
    Scalar alphan = param_or(spec, "alphan", Scalar(0));
    for (int t = 2; t <= n - 2; t++) a.add_product(0, x, one_based(t), at[t]);
    a.add_product(0, x, one_based(n - 1), Scalar(1));
    // [e2,x] = e2 + sum_{t=3..n-2} a_{t-1} e_t + en
    a.add_product(1, x, 1, Scalar(1));
    for (int t = 3; t <= n - 2; t++) a.add_product(1, x, one_based(t), at[t - 1]);
    a.add_product(1, x, one_based(n), Scalar(1));
    for (int i = 3; i <= n - 2; i++) {
      a.add_product(one_based(i), x, one_based(i), Scalar(1));
      for (int t = i + 1; t <= n - 2; t++)
        a.add_product(one_based(i), x, one_based(t), at[t - i + 1]);
    }
    // [e_{n-1},x] = sum_{t=2..n-4} a_t e_t + b_{n-3} e_{n-3} + b_{n-2} e_{n-2} + e_{n-1}
    for (int t = 2; t <= n - 4; t++) a.add_product(one_based(n - 1), x, one_based(t), at[t]);
    a.add_product(one_based(n - 1), x, one_based(n - 3), bn3);
    a.add_product(one_based(n - 1), x, one_based(n - 2), bn2);
    a.add_product(one_based(n - 1), x, one_based(n - 1), Scalar(1));
    // [en,x] = (b_{n-3} - a_{n-3}) e_{n-2}
    a.add_product(one_based(n), x, one_based(n - 2), bn3 - at[n - 3]);
    // [x,x] = alphan * en
    a.add_product(x, x, one_based(n), alphan);
    return a;
  }

  // a1 = 1 branches share the diagonal [ei,x] = (i + a) ei pattern
  Scalar aa;  // the e_{n-1}-weight parameter
  switch (which) {
    case 1: {
      aa = param_or(spec, "a", Scalar(1));
      for (long long bad : {4LL - n, 3LL - n, 2LL - n, 0LL})
        if (aa == Scalar(bad))
          throw std::invalid_argument("R1(1,0,0) excludes a in {4-n, 3-n, 2-n, 0}");
      break;
    }
    case 2: aa = Scalar(0); break;
    case 3: aa = Scalar(4 - n); break;
    case 4: aa = Scalar(3 - n); break;
    case 5: aa = Scalar(2 - n); break;
    default: throw std::invalid_argument("unknown R(1,0,0) index");
  }
  Scalar cc = Scalar(1);  // [x,e1] e_{n-1}-coefficient
  if (which == 2) {
    cc = param_or(spec, "c", Scalar(2));
    if (cc == Scalar(1)) throw std::invalid_argument("R2(1,0,0) excludes c = 1");
  }
  // [e1,x] = e1 + a e_{n-1}; [e2,x] = (2+a) e2 + a en; [ei,x] = (i+a) ei
  a.add_product(0, x, 0, Scalar(1));
  a.add_product(0, x, one_based(n - 1), aa);
  a.add_product(1, x, 1, Scalar(2) + aa);
  a.add_product(1, x, one_based(n), aa);
  for (int i = 3; i <= n - 2; i++)
    a.add_product(one_based(i), x, one_based(i), Scalar(i) + aa);
  // [e_{n-1},x] = (1+a) e_{n-1} (+ b_{n-3} e_{n-3} for R3, + b_{n-2} e_{n-2} for R4)
  a.add_product(one_based(n - 1), x, one_based(n - 1), Scalar(1) + aa);
  if (which == 3) a.add_product(one_based(n - 1), x, one_based(n - 3), Scalar(1));
  if (which == 4) a.add_product(one_based(n - 1), x, one_based(n - 2), Scalar(1));
  // [en,x] = 2 en (+ b_{n-3} e_{n-2} for R3)
  a.add_product(one_based(n), x, one_based(n), Scalar(2));
  if (which == 3) a.add_product(one_based(n), x, one_based(n - 2), Scalar(1));
  // [x,e1] = -e1 + c e_{n-1}
  a.add_product(x, 0, 0, Scalar(-1));
  a.add_product(x, 0, one_based(n - 1), cc);
  // [x,x]: e_{n-4} for R3, e_{n-3} for R4, e_{n-2} for R5
  if (which == 3) a.add_product(x, x, one_based(n - 4), Scalar(1));
  if (which == 4) a.add_product(x, x, one_based(n - 3), Scalar(1));
  if (which == 5) a.add_product(x, x, one_based(n - 2), Scalar(1));
  return a;
}

// --- solvable extensions of G(1,1,0) and G(1,2,1) ---------------------------

// Case a1 = 1 skeleton, common to both nilradicals. beta2 selects G(1,2,1)
// (extra gamma-terms and the doubled e2-weight).
AlgebraInstance build_H_case1(const FamilySpec& spec, bool g121, const Scalar& a3,
                              const Scalar& bn, const Scalar& d2, const Scalar& alpha2,
                              const Scalar& alphan) {
  const int n = spec.n;
  if (n < 7 || n % 2 == 0) throw std::invalid_argument("H families need odd n >= 7");
  FamilySpec nilspec{FamilyTag::G, n, Scalar(1), g121 ? Scalar(2) : Scalar(1),
                     g121 ? Scalar(1) : Scalar(0), {}};
  AlgebraInstance a(n + 1);
  put_nilradical(a, build_G(nilspec));
  const int x = n;
  const Scalar w2 = g121 ? Scalar(2) + Scalar(2) * a3 : Scalar(2) + a3;

  // [e1,x] = e1 + a3 e3 - a3 d2 e2
  a.add_product(0, x, 0, Scalar(1));
  a.add_product(0, x, 2, a3);
  a.add_product(0, x, 1, -(a3 * d2));
  a.add_product(1, x, 1, w2);
  a.add_product(2, x, 2, Scalar(1) + a3);
  a.add_product(2, x, one_based(n), bn);
  // [e4,x] = (2+a3) e4 (+ a3 e2 when gamma = 1)
  a.add_product(3, x, 3, Scalar(2) + a3);
  if (g121) a.add_product(3, x, 1, a3);
  for (int i = 5; i <= n - 1; i++)
    a.add_product(one_based(i), x, one_based(i), Scalar(i - 2) + a3);
  a.add_product(one_based(n), x, one_based(n), Scalar(n - 2) + Scalar(2) * a3);

  a.add_product(x, 0, 0, Scalar(-1));
  a.add_product(x, 0, 2, -a3);
  a.add_product(x, 2, 1, d2);
  a.add_product(x, 2, 2, -(Scalar(1) + a3));
  a.add_product(x, 2, one_based(n), -bn);
  // [x,e4] = e2 - (2+a3) e4, with the e2 part doubled to (2+a3) e2 for G(1,2,1)
  a.add_product(x, 3, 1, g121 ? Scalar(2) + a3 : Scalar(1));
  a.add_product(x, 3, 3, -(Scalar(2) + a3));
  for (int i = 5; i <= n - 1; i++)
    a.add_product(x, one_based(i), one_based(i), -(Scalar(i - 2) + a3));
  a.add_product(x, one_based(n), one_based(n), -(Scalar(n - 2) + Scalar(2) * a3));
  a.add_product(x, x, 1, alpha2);
  a.add_product(x, x, one_based(n), alphan);
  return a;
}

// Case a1 = 0, a3 = 1 family (last case of each classification).
AlgebraInstance build_H_case2(const FamilySpec& spec, bool g121) {
  const int n = spec.n;
  if (n < 7 || n % 2 == 0) throw std::invalid_argument("H families need odd n >= 7");
  FamilySpec nilspec{FamilyTag::G, n, Scalar(1), g121 ? Scalar(2) : Scalar(1),
                     g121 ? Scalar(1) : Scalar(0), {}};
  AlgebraInstance a(n + 1);
  put_nilradical(a, build_G(nilspec));
  const int x = n;

  // free parameters: b4, b6, ..., b_{n-1} (even), bn, alphan; dn = -bn forced
  std::vector<Scalar> b(n + 1);
  for (int t = 4; t <= n - 1; t++)
    if (t % 2 == 0) b[t] = param_or(spec, "b" + std::to_string(t), Scalar(0));
  b[n] = param_or(spec, "bn", Scalar(0));
  Scalar alphan = param_or(spec, "alphan", Scalar(0));
  Scalar dn = -b[n];

  a.add_product(0, x, 2, Scalar(1));                       // [e1,x] = e3
  a.add_product(1, x, 1, g121 ? Scalar(2) : Scalar(1));    // [e2,x] = (beta) e2
  a.add_product(2, x, 2, Scalar(1));                       // [e3,x] = e3 + sum b_t e_t
  for (int t = 4; t <= n; t++) a.add_product(2, x, one_based(t), b[t]);
  // [e4,x] = e4 + sum_{t=5..n-1} b_{t-1} e_t + b_{n-1} e_n (+ e2 when gamma = 1)
  a.add_product(3, x, 3, Scalar(1));
  if (g121) a.add_product(3, x, 1, Scalar(1));
  for (int t = 5; t <= n - 1; t++) a.add_product(3, x, one_based(t), b[t - 1]);
  a.add_product(3, x, one_based(n), b[n - 1]);
  for (int i = 5; i <= n - 1; i++) {
    a.add_product(one_based(i), x, one_based(i), Scalar(1));
    for (int t = i + 1; t <= n - 1; t++)
      a.add_product(one_based(i), x, one_based(t), b[t - i + 3]);
    a.add_product(one_based(i), x, one_based(n), b[n - i + 3]);
  }
  a.add_product(one_based(n), x, one_based(n), Scalar(2));

  a.add_product(x, 0, 2, Scalar(-1));  // [x,e1] = -e3
  a.add_product(x, 2, 2, Scalar(-1));  // [x,e3] = -e3 - sum_{t<=n-1} b_t e_t + dn en
  for (int t = 4; t <= n - 1; t++) a.add_product(x, 2, one_based(t), -b[t]);
  a.add_product(x, 2, one_based(n), dn);
  // [x,e4] = -e4 - sum b_{t-1} e_t - b_{n-1} en (+ e2 when gamma = 1)
  a.add_product(x, 3, 3, Scalar(-1));
  if (g121) a.add_product(x, 3, 1, Scalar(1));
  for (int t = 5; t <= n - 1; t++) a.add_product(x, 3, one_based(t), -b[t - 1]);
  a.add_product(x, 3, one_based(n), -b[n - 1]);
  for (int i = 5; i <= n - 1; i++) {
    a.add_product(x, one_based(i), one_based(i), Scalar(-1));
    for (int t = i + 1; t <= n - 1; t++)
      a.add_product(x, one_based(i), one_based(t), -b[t - i + 3]);
    a.add_product(x, one_based(i), one_based(n), -b[n - i + 3]);
  }
  a.add_product(x, one_based(n), one_based(n), Scalar(-2));
  a.add_product(x, x, one_based(n), alphan);
  return a;
}

AlgebraInstance build_H(const FamilySpec& spec, bool g121, int which) {
  const int n = spec.n;
  const Scalar zero(0), one(1);
  Scalar half(1, 2);
  if (!g121) {
    switch (which) {
      case 1: {
        Scalar a3 = param_or(spec, "a3", Scalar(1));
        for (const Scalar& bad :
             {Scalar(-2), Scalar(3 - n), Scalar(Rational(2 - n, 2)), Scalar(Rational(3 - n, 2))})
          if (a3 == bad)
            throw std::invalid_argument("H1(1,1,0) excludes a3 in {-2, 3-n, (2-n)/2, (3-n)/2}");
        return build_H_case1(spec, false, a3, zero, zero, zero, zero);
      }
      case 2: return build_H_case1(spec, false, Scalar(-2), zero, zero, one, zero);
      case 3: return build_H_case1(spec, false, Scalar(3 - n), one, zero, zero, zero);
      case 4: return build_H_case1(spec, false, Scalar(Rational(2 - n, 2)), zero, zero, zero, one);
      case 5: return build_H_case1(spec, false, Scalar(Rational(3 - n, 2)), one, zero, zero, zero);
      case 6: return build_H_case2(spec, false);
    }
  } else {
    switch (which) {
      case 1: {
        Scalar a3 = param_or(spec, "a3", Scalar(1));
        for (const Scalar& bad :
             {Scalar(-1), Scalar(3 - n), Scalar(Rational(2 - n, 2)), Scalar(Rational(3 - n, 2))})
          if (a3 == bad)
            throw std::invalid_argument("H1(1,2,1) excludes a3 in {-1, 3-n, (2-n)/2, (3-n)/2}");
        return build_H_case1(spec, true, a3, zero, zero, zero, zero);
      }
      case 2: return build_H_case1(spec, true, Scalar(-1), zero, one, zero, zero);
      case 3: return build_H_case1(spec, true, Scalar(-1), zero, zero, one, zero);
      case 4: return build_H_case1(spec, true, Scalar(3 - n), one, zero, zero, zero);
      case 5: return build_H_case1(spec, true, Scalar(Rational(2 - n, 2)), zero, zero, zero, one);
      case 6: return build_H_case1(spec, true, Scalar(Rational(3 - n, 2)), one, zero, zero, zero);
      case 7: return build_H_case2(spec, true);
    }
  }
  throw std::invalid_argument("unknown H index");
}

void label_extension(AlgebraInstance& a) {
  auto labels = a.labels();
  labels.back() = "x";
  a.set_labels(labels);
}

}  // namespace

std::string family_name(FamilyTag t) {
  for (auto& [tag, name] : kNames)
    if (tag == t) return name;
  return "?";
}

std::optional<FamilyTag> family_from_name(const std::string& name) {
  for (auto& [tag, nm] : kNames)
    if (name == nm) return tag;
  return std::nullopt;
}

bool family_is_solvable(FamilyTag t) {
  switch (t) {
    case FamilyTag::mu1:
    case FamilyTag::mu2:
    case FamilyTag::L:
    case FamilyTag::G:
      return false;
    default:
      return true;
  }
}

AlgebraInstance build(const FamilySpec& spec) {
  AlgebraInstance a;
  switch (spec.tag) {
    case FamilyTag::mu1: a = build_mu(spec, false); break;
    case FamilyTag::mu2: a = build_mu(spec, true); break;
    case FamilyTag::L: a = build_L(spec); break;
    case FamilyTag::G: a = build_G(spec); break;
    default:
      throw std::invalid_argument("build() handles nilpotent families; use build_solvable");
  }
  require_leibniz(a, family_name(spec.tag));
  return a;
}

FamilySpec with_default_params(FamilySpec spec) { return spec; }

AlgebraInstance build_solvable(const FamilySpec& spec) {
  AlgebraInstance a;
  switch (spec.tag) {
    case FamilyTag::R1_1m10: a = build_R_1m10(spec, 1); break;
    case FamilyTag::R2_1m10: a = build_R_1m10(spec, 2); break;
    case FamilyTag::R1_100: a = build_R_100(spec, 1); break;
    case FamilyTag::R2_100: a = build_R_100(spec, 2); break;
    case FamilyTag::R3_100: a = build_R_100(spec, 3); break;
    case FamilyTag::R4_100: a = build_R_100(spec, 4); break;
    case FamilyTag::R5_100: a = build_R_100(spec, 5); break;
    case FamilyTag::R6_100: a = build_R_100(spec, 6); break;
    case FamilyTag::H1_110: a = build_H(spec, false, 1); break;
    case FamilyTag::H2_110: a = build_H(spec, false, 2); break;
    case FamilyTag::H3_110: a = build_H(spec, false, 3); break;
    case FamilyTag::H4_110: a = build_H(spec, false, 4); break;
    case FamilyTag::H5_110: a = build_H(spec, false, 5); break;
    case FamilyTag::H6_110: a = build_H(spec, false, 6); break;
    case FamilyTag::H1_121: a = build_H(spec, true, 1); break;
    case FamilyTag::H2_121: a = build_H(spec, true, 2); break;
    case FamilyTag::H3_121: a = build_H(spec, true, 3); break;
    case FamilyTag::H4_121: a = build_H(spec, true, 4); break;
    case FamilyTag::H5_121: a = build_H(spec, true, 5); break;
    case FamilyTag::H6_121: a = build_H(spec, true, 6); break;
    case FamilyTag::H7_121: a = build_H(spec, true, 7); break;
    default:
      throw std::invalid_argument("build_solvable() handles the extension families");
  }
  label_extension(a);
  require_leibniz(a, family_name(spec.tag));

  Subspace nil = Subspace::span(a.dim(), [&] {
    std::vector<Vec> rows;
    for (int i = 0; i < spec.n; i++) rows.push_back(unit_vec(a.dim(), i));
    return rows;
  }());
  auto cert = verify_solvable_extension(a, nil);
  if (!cert.ok())
    throw std::runtime_error(family_name(spec.tag) + ": solvable-extension certificate failed (" +
                             cert.describe() + ")");
  return a;
}

namespace {

std::string normalize_alias(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '{' || c == '}' || c == '^' || c == '_' || c == ' ' || c == ',') continue;
    out.push_back(std::tolower((unsigned char)c));
  }
  // unify the parameter spellings: "b"/"beta", "g"/"gamma"
  auto replace_all = [&](const std::string& from, const std::string& to) {
    size_t p = 0;
    while ((p = out.find(from, p)) != std::string::npos) {
      out.replace(p, from.size(), to);
      p += to.size();
    }
  };
  replace_all("beta", "b");
  replace_all("gamma", "g");
  return out;
}

}  // namespace

const std::vector<std::string>& alias_names() {
  static const std::vector<std::string> names = {
      "L^{1,beta}", "L^{2,beta}", "L^{3,beta}", "L^{4,gamma}", "L^{5,beta,gamma}",
      "L^1", "L^2", "L^3", "L^4", "L^5", "L^{6,beta}", "L^{7,gamma}", "L^{8,beta,gamma}"};
  return names;
}

AliasInfo alias(const std::string& name) {
  const Scalar z(0), one(1), two(2);
  const std::optional<Scalar> free = std::nullopt;
  std::string key = normalize_alias(name);
  if (key == "l1b") return {FamilyTag::L, z, free, z};
  if (key == "l2b") return {FamilyTag::L, z, free, one};
  if (key == "l3b") return {FamilyTag::L, one, free, z};
  if (key == "l4g") return {FamilyTag::L, one, z, free};
  if (key == "l5bg") return {FamilyTag::L, one, free, free};
  if (key == "l1") return {FamilyTag::G, z, z, z};
  if (key == "l2") return {FamilyTag::G, z, one, z};
  if (key == "l3") return {FamilyTag::G, z, z, one};
  if (key == "l4") return {FamilyTag::G, z, two, one};
  if (key == "l5") return {FamilyTag::G, one, z, z};
  if (key == "l6b") return {FamilyTag::G, one, free, z};
  if (key == "l7g") return {FamilyTag::G, one, z, free};
  if (key == "l8bg") return {FamilyTag::G, one, free, free};
  throw std::invalid_argument("unknown family alias: " + name);
}

}  // namespace qfl
