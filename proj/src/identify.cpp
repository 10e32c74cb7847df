#include "pinchband/identify.hpp"

#include <numeric>
#include <sstream>

#include "pinchband/errors.hpp"
#include "pinchband/goeritz.hpp"

namespace pinchband {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::int64_t mag = c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag < 0) mag = -mag;
    if (e == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << 'A';
      if (e != 1) os << '^' << e;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// bracket

namespace {

int uf_find(std::array<int, 2 * kMaxBracketCrossings>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) {
    parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    x = parent[static_cast<std::size_t>(x)];
  }
  return x;
}

}  // namespace

LaurentPoly kauffman_bracket(const Diagram& d) {
  const int n = d.crossing_count();
  if (n > kMaxBracketCrossings) {
    throw TooManyCrossings("bracket limited to " + std::to_string(kMaxBracketCrossings) + " crossings, got " +
                           std::to_string(n));
  }
  if (n == 0) return LaurentPoly::monomial(1, 0);

  const int labels = 2 * n;
  // count[a][loops]: number of states with `a` A-smoothings and that many loops.
  std::vector<std::vector<std::int64_t>> count(static_cast<std::size_t>(n + 1),
                                               std::vector<std::int64_t>(static_cast<std::size_t>(labels + 1), 0));
  const std::uint32_t states = 1u << n;
  for (std::uint32_t s = 0; s < states; ++s) {
    std::array<int, 2 * kMaxBracketCrossings> parent{};
    std::iota(parent.begin(), parent.begin() + labels, 0);
    int loops = labels;
    auto unite = [&](int x, int y) {
      const int a = uf_find(parent, x - 1);
      const int b = uf_find(parent, y - 1);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --loops;
      }
    };
    int a_count = 0;
    for (int c = 0; c < n; ++c) {
      const Crossing& x = d.crossing(c);
      if ((s >> c) & 1u) {
        unite(x[0], x[3]);
        unite(x[1], x[2]);
      } else {
        ++a_count;
        unite(x[0], x[1]);
        unite(x[2], x[3]);
      }
    }
    ++count[static_cast<std::size_t>(a_count)][static_cast<std::size_t>(loops)];
  }

  const LaurentPoly delta = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  std::vector<LaurentPoly> delta_pow{LaurentPoly::monomial(1, 0)};
  for (int k = 1; k < labels; ++k) delta_pow.push_back(delta_pow.back() * delta);

  LaurentPoly out;
  for (int a = 0; a <= n; ++a) {
    for (int loops = 1; loops <= labels; ++loops) {
      const std::int64_t c = count[static_cast<std::size_t>(a)][static_cast<std::size_t>(loops)];
      if (c == 0) continue;
      out += LaurentPoly::monomial(c, a - (n - a)) * delta_pow[static_cast<std::size_t>(loops - 1)];
    }
  }
  return out;
}

LaurentPoly normalized_bracket(const Diagram& d) {
  const int w = writhe(d);
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  return LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w) * kauffman_bracket(d);
}

KnotFingerprint fingerprint(const Diagram& d) {
  const SignatureReport r = knot_signature(d);
  return {r.determinant, r.sigma, normalized_bracket(d)};
}

// ---------------------------------------------------------------------------
// simplification

namespace {

/// Rebuilds a diagram from surviving crossings after label merges. `merges`
/// identifies pairs of labels that become one edge once crossings disappear.
Diagram rebuild(const std::vector<Crossing>& kept, const std::vector<std::pair<int, int>>& merges, int old_labels,
                const std::string& label) {
  std::vector<int> parent(static_cast<std::size_t>(old_labels + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& [a, b] : merges) {
    const int ra = find(a);
    const int rb = find(b);
    if (ra != rb) parent[static_cast<std::size_t>(ra)] = rb;
  }
  std::map<int, int> compact;
  std::vector<Crossing> out;
  out.reserve(kept.size());
  for (const Crossing& c : kept) {
    Crossing r;
    for (int s = 0; s < 4; ++s) {
      const int root = find(c[s]);
      auto [it, inserted] = compact.try_emplace(root, static_cast<int>(compact.size()) + 1);
      r.slots[static_cast<std::size_t>(s)] = it->second;
    }
    out.push_back(r);
  }
  return normalize(Diagram(std::move(out), label));
}

std::optional<Diagram> remove_one_kink(const Diagram& d) {
  for (int c = 0; c < d.crossing_count(); ++c) {
    const Crossing& x = d.crossing(c);
    for (int k = 0; k < 4; ++k) {
      if (x[k] != x[(k + 1) % 4]) continue;
      std::vector<Crossing> kept;
      for (int o = 0; o < d.crossing_count(); ++o) {
        if (o != c) kept.push_back(d.crossing(o));
      }
      if (kept.empty()) return Diagram({}, d.label());
      return rebuild(kept, {{x[(k + 2) % 4], x[(k + 3) % 4]}}, d.edge_count(), d.label());
    }
  }
  return std::nullopt;
}

std::optional<Diagram> remove_one_bigon(const Diagram& d) {
  const FaceStructure fs = face_structure(orient(d));
  for (const Face& f : fs.faces) {
    if (f.corners.size() != 2) continue;
    const auto [c1, p] = f.corners[0];
    const auto [c2, q] = f.corners[1];
    if (c1 == c2) continue;
    // The shared edges sit at slots p+1 / q and p / q+1; both have the same
    // over/under status at their two ends exactly when one strand passes over
    // the other twice.
    if ((p + 1) % 2 != q % 2) continue;
    const Crossing& a = d.crossing(c1);
    const Crossing& b = d.crossing(c2);
    std::vector<Crossing> kept;
    for (int o = 0; o < d.crossing_count(); ++o) {
      if (o != c1 && o != c2) kept.push_back(d.crossing(o));
    }
    if (kept.empty()) return Diagram({}, d.label());
    return rebuild(kept, {{a[(p + 3) % 4], b[(q + 2) % 4]}, {a[(p + 2) % 4], b[(q + 3) % 4]}}, d.edge_count(),
                   d.label());
  }
  return std::nullopt;
}

}  // namespace

Diagram simplify(const Diagram& d) {
  Diagram cur = d;
  while (true) {
    if (auto next = remove_one_kink(cur)) {
      cur = std::move(*next);
      continue;
    }
    if (auto next = remove_one_bigon(cur)) {
      cur = std::move(*next);
      continue;
    }
    return cur;
  }
}

// ---------------------------------------------------------------------------
// table

namespace {

struct TableEntry {
  KnotId id;
  std::vector<std::string> aliases;
};

std::string mirror_name(const std::string& name) {
  if (name.starts_with("T(2,")) return "T(2,-" + name.substr(4);
  return "m" + name;
}

std::vector<TableEntry> build_table() {
  std::vector<TableEntry> out;
  for (const std::string& name : table_names()) {
    const std::string alias = table_alias(name);
    const Diagram d = table_diagram(name);
    const KnotFingerprint fp = fingerprint(d);
    const bool slice = name == "unknot" || name == "6_1";
    TableEntry base{{name, slice, fp}, {}};
    if (!alias.empty()) base.aliases.push_back(alias);
    out.push_back(base);
    const KnotFingerprint mfp = fingerprint(mirror(d));
    if (mfp == fp) continue;  // amphichiral
    TableEntry m{{mirror_name(name), slice, mfp}, {"m" + name}};
    if (!alias.empty()) m.aliases.push_back("m" + alias);
    out.push_back(m);
  }
  return out;
}

const std::vector<TableEntry>& table_entries() {
  static const std::vector<TableEntry> table = build_table();
  return table;
}

}  // namespace

const std::vector<KnotId>& knot_table() {
  static const std::vector<KnotId> ids = [] {
    std::vector<KnotId> v;
    for (const auto& e : table_entries()) v.push_back(e.id);
    return v;
  }();
  return ids;
}

const KnotId& knot_by_name(std::string_view name) {
  for (const auto& e : table_entries()) {
    if (e.id.name == name) return e.id;
    for (const auto& a : e.aliases) {
      if (a == name) return e.id;
    }
  }
  throw UnknownName("no table knot named \"" + std::string(name) + "\"");
}

Identification identify(const Diagram& d) {
  Identification out;
  out.simplified = simplify(d);
  const SignatureReport r = knot_signature(out.simplified);
  std::vector<const KnotId*> prefilter;
  for (const KnotId& k : knot_table()) {
    if (k.fingerprint.determinant == r.determinant && k.fingerprint.signature == r.sigma) prefilter.push_back(&k);
  }
  if (prefilter.empty()) {
    out.reason = "no table knot has det " + std::to_string(r.determinant) + " and signature " + std::to_string(r.sigma);
    return out;
  }
  if (out.simplified.crossing_count() > kMaxBracketCrossings) {
    out.reason = "simplified diagram has " + std::to_string(out.simplified.crossing_count()) +
                 " crossings, beyond the bracket budget";
    return out;
  }
  const LaurentPoly bracket = normalized_bracket(out.simplified);
  for (const KnotId* k : prefilter) {
    if (k->fingerprint.bracket == bracket) out.candidates.push_back(k->name);
  }
  if (out.candidates.empty()) {
    out.reason = "fingerprint matches no table knot";
  } else if (out.candidates.size() > 1) {
    out.kind = Identification::Kind::ambiguous;
    out.reason = "fingerprint shared by several table knots";
  } else {
    out.kind = Identification::Kind::known;
    out.knot = knot_by_name(out.candidates.front());
  }
  return out;
}

KnotId identify_known(const Diagram& d) {
  Identification id = identify(d);
  if (id.kind != Identification::Kind::known) throw UnknownKnot(id.reason);
  return *id.knot;
}

}  // namespace pinchband
