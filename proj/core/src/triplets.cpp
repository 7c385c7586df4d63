#include "sqtriplets/triplets.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "sqtriplets/error.hpp"

namespace sqt {

namespace {

std::set<int> bar(const std::set<int>& s, int n) {
  std::set<int> out;
  for (int x : s) out.insert(n - x);
  return out;
}

int count_in_range(const std::set<int>& s, int lo, int hi) {
  int c = 0;
  for (int x : s)
    if (x >= lo && x <= hi) ++c;
  return c;
}

std::string set_to_string(const std::set<int>& s) {
  std::ostringstream os;
  bool first = true;
  for (int x : s) {
    if (!first) os << ",";
    os << x;
    first = false;
  }
  return os.str();
}

}  // namespace

bool DegreeTriplet::operator<(const DegreeTriplet& o) const {
  return std::tie(n, a, b, c) < std::tie(o.n, o.a, o.b, o.c);
}

TripletParams derive_params(const DegreeTriplet& t) {
  const int n = t.n;
  if (t.a.empty() || t.b.empty() || t.c.empty())
    throw domain_error("degree triplet with an empty side");
  for (const std::set<int>* s : {&t.a, &t.b, &t.c})
    if (*s->begin() < 0 || *s->rbegin() > n)
      throw domain_error("degree outside [0, n]");
  TripletParams p;
  p.c = *t.a.begin();
  p.a = *t.b.begin();
  p.b = *t.c.begin();
  auto check_end = [&](const std::set<int>& s, int want, const char* side) {
    if (*s.rbegin() != want) {
      std::ostringstream os;
      os << "endpoint condition fails on side " << side << ": max is "
         << *s.rbegin() << ", expected " << want;
      throw domain_error(os.str());
    }
  };
  check_end(t.a, n - p.b, "A");
  check_end(t.b, n - p.c, "B");
  check_end(t.c, n - p.a, "C");
  p.e_a = (n - p.b - p.c + 1) - static_cast<int>(t.a.size());
  p.e_b = (n - p.c - p.a + 1) - static_cast<int>(t.b.size());
  p.e_c = (n - p.a - p.b + 1) - static_cast<int>(t.c.size());
  if (p.a + p.b + p.c + p.e() != n) {
    std::ostringstream os;
    os << "count condition fails: a+b+c+e = " << p.a + p.b + p.c + p.e()
       << " but n = " << n;
    throw domain_error(os.str());
  }
  return p;
}

namespace {

// Corner condition: for every corner <= v <= n the number of elements of
// [corner, v] in X exceeds the number of elements of [corner, v] not in
// Ybar.
std::optional<int> corner_violation(const std::set<int>& x,
                                    const std::set<int>& ybar, int corner,
                                    int n) {
  for (int v = corner; v <= n; ++v) {
    const int in_x = count_in_range(x, corner, v);
    const int total = v - corner + 1;
    const int in_ybar = count_in_range(ybar, corner, v);
    if (in_x <= total - in_ybar) return v;
  }
  return std::nullopt;
}

}  // namespace

BalanceReport check_balanced(const DegreeTriplet& t) {
  BalanceReport rep;
  TripletParams p;
  try {
    p = derive_params(t);
  } catch (const domain_error& e) {
    rep.violation = e.what();
    return rep;
  }
  const int n = t.n;
  struct Corner {
    const char* name;
    const std::set<int>* x;
    std::set<int> ybar;
    int corner;
  };
  const Corner corners[3] = {
      {"c", &t.a, bar(t.b, n), p.c},
      {"a", &t.b, bar(t.c, n), p.a},
      {"b", &t.c, bar(t.a, n), p.b},
  };
  for (const Corner& cr : corners) {
    if (auto v = corner_violation(*cr.x, cr.ybar, cr.corner, n)) {
      std::ostringstream os;
      os << "balance fails at corner " << cr.name << ", v = " << *v;
      rep.violation = os.str();
      return rep;
    }
  }
  rep.balanced = true;
  return rep;
}

bool is_balanced(const DegreeTriplet& t) { return check_balanced(t).balanced; }

namespace {

// Subsets of the open interval (lo, hi) of given size, as sorted vectors.
void internal_choices(int lo, int hi, int count,
                      std::vector<std::vector<int>>& out) {
  std::vector<int> slots;
  for (int x = lo + 1; x < hi; ++x) slots.push_back(x);
  const int m = static_cast<int>(slots.size());
  if (count > m) return;
  std::vector<int> idx(count);
  for (int i = 0; i < count; ++i) idx[i] = i;
  while (true) {
    std::vector<int> pick(count);
    for (int i = 0; i < count; ++i) pick[i] = slots[idx[i]];
    out.push_back(std::move(pick));
    int i = count - 1;
    while (i >= 0 && idx[i] == m - count + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < count; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Side candidates: subsets of [lo, hi] containing both endpoints and
// missing exactly `missing` interior elements.
std::vector<std::set<int>> side_candidates(int lo, int hi, int missing) {
  std::vector<std::set<int>> out;
  if (lo > hi) return out;
  if (lo == hi) {
    if (missing == 0) out.push_back({lo});
    return out;
  }
  std::vector<std::vector<int>> gaps;
  internal_choices(lo, hi, missing, gaps);
  for (const auto& gap : gaps) {
    std::set<int> side;
    for (int x = lo; x <= hi; ++x) side.insert(x);
    for (int x : gap) side.erase(x);
    out.push_back(std::move(side));
  }
  return out;
}

}  // namespace

std::vector<DegreeTriplet> enumerate_balanced(int n, int threads) {
  if (n < 1) throw domain_error("enumerate_balanced needs n >= 1");

  // work units: one per (a, b, c, e_a, e_b, e_c)
  struct Unit {
    int a, b, c, e_a, e_b, e_c;
  };
  std::vector<Unit> units;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b)
      for (int c = 0; a + b + c <= n; ++c) {
        const int e = n - a - b - c;
        for (int e_a = 0; e_a <= e; ++e_a)
          for (int e_b = 0; e_a + e_b <= e; ++e_b)
            units.push_back({a, b, c, e_a, e_b, e - e_a - e_b});
      }

  std::vector<std::vector<DegreeTriplet>> found(units.size());
  auto work = [&](std::size_t i) {
    const Unit& u = units[i];
    for (const auto& a_side : side_candidates(u.c, n - u.b, u.e_a))
      for (const auto& b_side : side_candidates(u.a, n - u.c, u.e_b))
        for (const auto& c_side : side_candidates(u.b, n - u.a, u.e_c)) {
          DegreeTriplet t{n, a_side, b_side, c_side};
          if (is_balanced(t)) found[i].push_back(std::move(t));
        }
  };
  if (threads <= 1) {
    for (std::size_t i = 0; i < units.size(); ++i) work(i);
  } else {
    std::vector<std::thread> pool;
    std::size_t stride = static_cast<std::size_t>(threads);
    for (std::size_t w = 0; w < stride; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < units.size(); i += stride) work(i);
      });
    for (auto& th : pool) th.join();
  }

  std::vector<DegreeTriplet> out;
  for (auto& chunk : found)
    out.insert(out.end(), chunk.begin(), chunk.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DegreeTriplet rotate_sides(const DegreeTriplet& t) {
  return DegreeTriplet{t.n, t.b, t.c, t.a};
}

DegreeTriplet reduce(const DegreeTriplet& t) {
  const TripletParams p = derive_params(t);
  if (!is_balanced(t)) throw domain_error("reduce needs a balanced triplet");
  if (p.e_a == 0)
    throw domain_error(
        "no internal nondegree on side A; rotate the sides (B, C, A) and "
        "reduce there");
  const int n = t.n;
  const int c = p.c;
  int tt = 0;
  while (t.a.count(c + tt)) ++tt;
  const std::set<int> bbar = bar(t.b, n);
  int s = 1;
  while (!bbar.count(c + s)) ++s;  // bbar meets [c+1, ...] first at c+s

  std::set<int> a_new = t.a;
  for (int x = c; x <= c + s - 1; ++x) a_new.erase(x);
  a_new.insert(c + tt);
  std::set<int> bbar_new = bbar;
  bbar_new.erase(c);
  return DegreeTriplet{n, a_new, bar(bbar_new, n), t.c};
}

RatMatrix reduced_system(const DegreeTriplet& t) {
  const TripletParams p = derive_params(t);
  const int n = t.n;
  const std::vector<int> degrees(t.a.begin(), t.a.end());
  const int r = static_cast<int>(degrees.size()) - 1;

  std::vector<int> v_rows, u_rows;
  const std::set<int> cbar = bar(t.c, n);
  for (int v = p.a; v <= n - p.b; ++v)
    if (!cbar.count(v)) v_rows.push_back(v);
  for (int u = p.a; u <= n - p.c; ++u)
    if (!t.b.count(u)) u_rows.push_back(u);

  RatMatrix m(static_cast<std::size_t>(r),
              static_cast<std::size_t>(r) + 1);
  std::size_t row = 0;
  auto fill = [&](long top_of, long lower) {
    for (int k = 0; k <= r; ++k) {
      Int e = binom(top_of < 0 ? Int(degrees[k]) : Int(top_of - degrees[k]),
                    lower);
      if (k % 2 == 1) e = -e;
      m(row, static_cast<std::size_t>(k)) = Rat(e);
    }
    ++row;
  };
  for (int v : v_rows) fill(-1, v);
  for (int u : u_rows) fill(n, u);
  for (int j = 0; j < p.a; ++j) fill(-1, j);
  if (row != m.rows())
    throw internal_error("reduced_system: row count does not equal r");
  return m;
}

RatMatrix full_system(const DegreeTriplet& t) {
  derive_params(t);
  const int n = t.n;
  const std::size_t blk = static_cast<std::size_t>(n) + 1;
  const RatMatrix a = transition_matrix(n);

  std::vector<RatVector> rows;
  auto zero_row = [&] { return RatVector(3 * blk); };
  for (std::size_t i = 0; i < blk; ++i) {  // A alpha - beta = 0
    RatVector row = zero_row();
    for (std::size_t j = 0; j < blk; ++j) row[j] = a(i, j);
    row[blk + i] = -1;
    rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < blk; ++i) {  // A beta - gamma = 0
    RatVector row = zero_row();
    for (std::size_t j = 0; j < blk; ++j) row[blk + j] = a(i, j);
    row[2 * blk + i] = -1;
    rows.push_back(std::move(row));
  }
  for (int d = 0; d <= n; ++d) {
    const std::size_t ud = static_cast<std::size_t>(d);
    if (!t.a.count(d)) {
      RatVector row = zero_row();
      row[ud] = 1;
      rows.push_back(std::move(row));
    }
    if (!t.b.count(d)) {
      RatVector row = zero_row();
      row[blk + ud] = 1;
      rows.push_back(std::move(row));
    }
    if (!t.c.count(d)) {
      RatVector row = zero_row();
      row[2 * blk + ud] = 1;
      rows.push_back(std::move(row));
    }
  }
  RatMatrix m(rows.size(), 3 * blk);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < 3 * blk; ++j) m(i, j) = rows[i][j];
  return m;
}

namespace {

// Extracts |hat| on the support and checks exact support and strand-parity
// sign consistency (one global sign per side).
struct SideExtract {
  IntVector values;
  bool support_exact = true;
  bool signs_consistent = true;
};

SideExtract extract_side(const RatVector& hat, const std::set<int>& support) {
  SideExtract out;
  int idx = 0;
  int sign_ref = 0;
  for (int d = 0; d < static_cast<int>(hat.size()); ++d) {
    const bool on = support.count(d) != 0;
    if (!on) {
      if (hat[d] != 0) out.support_exact = false;
      continue;
    }
    if (hat[d] == 0) out.support_exact = false;
    const Rat& q = hat[d];
    if (q.get_den() != 1)
      throw internal_error("sign-adjusted vector left the integers");
    Int num = q.get_num();
    if (num < 0) num = -num;
    out.values.push_back(num);
    const int expect = (idx + d) % 2 == 0 ? 1 : -1;
    const int actual = sgn(q);
    if (actual != 0) {
      if (sign_ref == 0)
        sign_ref = actual * expect;
      else if (actual != sign_ref * expect)
        out.signs_consistent = false;
    }
    ++idx;
  }
  return out;
}

}  // namespace

BettiSolution solve_betti(const DegreeTriplet& t) {
  const TripletParams p = derive_params(t);
  (void)p;
  const int n = t.n;
  BettiSolution sol;
  const auto basis = nullspace(reduced_system(t));
  sol.nullity = static_cast<int>(basis.size());
  if (sol.nullity != 1) return sol;

  const IntVector alpha = primitive_vector(basis.front());
  const std::vector<int> degrees(t.a.begin(), t.a.end());

  sol.alpha_hat.assign(static_cast<std::size_t>(n) + 1, Rat(0));
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    Rat v(alpha[i]);
    if ((static_cast<int>(i) + degrees[i]) % 2 != 0) v = -v;
    sol.alpha_hat[static_cast<std::size_t>(degrees[i])] = v;
  }
  const RatMatrix a = transition_matrix(n);
  sol.beta_hat = a.apply(sol.alpha_hat);
  sol.gamma_hat = a.apply(sol.beta_hat);

  // closing identity A gamma_hat = (-1)^n alpha_hat
  RatVector closed = a.apply(sol.gamma_hat);
  bool closes = true;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    const Rat want = n % 2 == 0 ? sol.alpha_hat[i] : -sol.alpha_hat[i];
    if (closed[i] != want) closes = false;
  }
  if (!closes)
    throw internal_error("solve_betti: transition identities do not close");

  const SideExtract ea = extract_side(sol.alpha_hat, t.a);
  const SideExtract eb = extract_side(sol.beta_hat, t.b);
  const SideExtract ec = extract_side(sol.gamma_hat, t.c);
  sol.alpha = alpha;
  sol.beta = eb.values;
  sol.gamma = ec.values;
  sol.supports_exact =
      ea.support_exact && eb.support_exact && ec.support_exact;
  sol.signs_consistent =
      ea.signs_consistent && eb.signs_consistent && ec.signs_consistent;
  auto all_positive = [](const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x > 0; });
  };
  sol.positive = all_positive(sol.alpha) && all_positive(sol.beta) &&
                 all_positive(sol.gamma);
  return sol;
}

IntVector herzog_kuhl(const std::vector<int>& degrees) {
  if (degrees.empty()) throw domain_error("herzog_kuhl: empty degree sequence");
  for (std::size_t i = 0; i + 1 < degrees.size(); ++i)
    if (degrees[i] >= degrees[i + 1])
      throw domain_error("herzog_kuhl: degrees must strictly increase");
  RatVector v(degrees.size());
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    Int denom = 1;
    for (std::size_t j = 0; j < degrees.size(); ++j) {
      if (j == i) continue;
      denom *= abs(Int(degrees[j] - degrees[i]));
    }
    v[i] = rat(Int(1), denom);
  }
  return primitive_vector(v);
}

namespace {

struct SideRender {
  std::string label;
  int lo, hi;
  const std::set<int>* members;
};

std::string circles(const SideRender& s) {
  std::string out;
  for (int d = s.lo; d <= s.hi; ++d) out += s.members->count(d) ? "●" : "○";
  return out;
}

}  // namespace

std::string render_triangle(const DegreeTriplet& t) {
  const TripletParams p = derive_params(t);
  const int n = t.n;
  // bottom side A from corner c to corner b; left side runs to the apex a
  // through the degrees of the second complex reversed; right side through
  // the third complex
  const std::set<int> bbar = bar(t.b, n);
  const SideRender bottom{"A", p.c, n - p.b, &t.a};
  const SideRender left{"B", p.c, n - p.a, &bbar};
  const SideRender right{"C", p.b, n - p.a, &t.c};

  const std::string sb = circles(bottom);
  const std::string sl = circles(left);
  const std::string sr = circles(right);
  const int lb = static_cast<int>(sl.size() / 3);  // UTF-8, 3 bytes each
  const int lr = static_cast<int>(sr.size() / 3);
  const int la = static_cast<int>(sb.size() / 3);

  const int height = std::max(lb, lr);
  const int width = 2 * la - 1;
  const double apex_x = static_cast<double>(width - 1) / 2.0;

  std::vector<std::vector<std::string>> canvas(
      static_cast<std::size_t>(height),
      std::vector<std::string>(static_cast<std::size_t>(std::max(width, 1)) + 2,
                               " "));
  auto put = [&](int row, int col, const std::string& glyph) {
    if (row < 0 || row >= height) return;
    for (;; ++col) {  // nudge right on collision
      while (col >= static_cast<int>(canvas[0].size()))
        for (auto& line : canvas) line.push_back(" ");
      auto& cell =
          canvas[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
      if (cell == " ") {
        cell = glyph;
        return;
      }
    }
  };
  auto glyph_at = [](const std::string& side, int i) {
    return side.substr(static_cast<std::size_t>(i) * 3, 3);
  };

  // bottom row
  for (int i = 0; i < la; ++i) put(height - 1, 2 * i, glyph_at(sb, i));
  // left side, bottom corner shared with A, apex drawn here
  for (int i = 1; i < lb; ++i) {
    const double f = lb > 1 ? static_cast<double>(i) / (lb - 1) : 1.0;
    const int row = height - 1 - static_cast<int>(f * (height - 1) + 0.5);
    const int col = static_cast<int>(f * apex_x + 0.5);
    put(row, col, glyph_at(sl, i));
  }
  // right side, bottom corner shared with A, apex shared with B
  for (int i = 1; i + 1 < lr; ++i) {
    const double f = lr > 1 ? static_cast<double>(i) / (lr - 1) : 1.0;
    const int row = height - 1 - static_cast<int>(f * (height - 1) + 0.5);
    const int col =
        static_cast<int>((width - 1) + f * (apex_x - (width - 1)) + 0.5);
    put(row, col, glyph_at(sr, i));
  }

  std::ostringstream os;
  os << "a = " << p.a << "\n";
  for (const auto& line : canvas) {
    std::string text;
    for (const auto& cell : line) text += cell;
    while (!text.empty() && text.back() == ' ') text.pop_back();
    os << text << "\n";
  }
  os << "c = " << p.c << std::string(static_cast<std::size_t>(width), ' ')
     << "b = " << p.b << "\n";
  const SideRender b_side{"B", p.a, n - p.c, &t.b};
  os << "A [" << bottom.lo << ".." << bottom.hi << "]: " << sb << "\n";
  os << "B [" << b_side.lo << ".." << b_side.hi << "]: " << circles(b_side)
     << "\n";
  os << "C [" << right.lo << ".." << right.hi << "]: " << sr << "\n";
  return os.str();
}

std::string triplet_to_string(const DegreeTriplet& t) {
  std::ostringstream os;
  os << "n=" << t.n << "; A=" << set_to_string(t.a)
     << "; B=" << set_to_string(t.b) << "; C=" << set_to_string(t.c);
  return os.str();
}

namespace {

std::set<int> parse_int_set(const std::string& s) {
  std::set<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(cur, &used);
    } catch (const std::exception&) {
      throw domain_error("malformed integer: " + cur);
    }
    if (used != cur.size()) throw domain_error("malformed integer: " + cur);
    out.insert(v);
    cur.clear();
  };
  for (char ch : s) {
    if (ch == ',') {
      flush();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  flush();
  return out;
}

}  // namespace

DegreeTriplet parse_triplet(const std::string& s) {
  DegreeTriplet t;
  bool have_n = false, have_a = false, have_b = false, have_c = false;
  std::istringstream is(s);
  std::string field;
  while (std::getline(is, field, ';')) {
    const auto eq = field.find('=');
    if (eq == std::string::npos)
      throw domain_error("malformed triplet field: " + field);
    std::string key = field.substr(0, eq);
    key.erase(std::remove_if(key.begin(), key.end(),
                             [](unsigned char c) { return std::isspace(c); }),
              key.end());
    const std::string value = field.substr(eq + 1);
    if (key == "n") {
      try {
        t.n = std::stoi(value);
      } catch (const std::exception&) {
        throw domain_error("malformed n: " + value);
      }
      have_n = true;
    } else if (key == "A") {
      t.a = parse_int_set(value);
      have_a = true;
    } else if (key == "B") {
      t.b = parse_int_set(value);
      have_b = true;
    } else if (key == "C") {
      t.c = parse_int_set(value);
      have_c = true;
    } else {
      throw domain_error("unknown triplet field: " + key);
    }
  }
  if (!(have_n && have_a && have_b && have_c))
    throw domain_error("triplet needs fields n, A, B, C");
  return t;
}

}  // namespace sqt
