#include "hecke/bitab.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace hecke {

int Bipartition::size() const { return partition_size(first) + partition_size(second); }

Bipartition StdBitableau::shape() const { return {tableau_shape(first), tableau_shape(second)}; }

int partition_size(const Partition& p) {
  int s = 0;
  for (int x : p) s += x;
  return s;
}

Partition tableau_shape(const Tableau& t) {
  Partition p;
  for (auto& row : t)
    if (!row.empty()) p.push_back(static_cast<int>(row.size()));
  return p;
}

int n_stat(const Partition& p) {
  int s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
  return s;
}

Partition conjugate(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  for (int j = 0; j < p[0]; ++j) {
    int h = 0;
    for (int x : p) h += x > j;
    c.push_back(h);
  }
  return c;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  if (partition_size(a) != partition_size(b)) throw UsageError("dominance: size mismatch");
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

bool dominance_leq(const Bipartition& a, const Bipartition& b) {
  if (a.size() != b.size()) throw UsageError("dominance: size mismatch");
  int sa = 0, sb = 0;
  auto step = [&](const Partition& x, const Partition& y) {
    for (std::size_t i = 0; i < std::max(x.size(), y.size()); ++i) {
      sa += i < x.size() ? x[i] : 0;
      sb += i < y.size() ? y[i] : 0;
      if (sa > sb) return false;
    }
    return true;
  };
  if (!step(a.first, b.first)) return false;
  // bring both running sums to |a1|, |b1| before the second components
  sa = partition_size(a.first);
  sb = partition_size(b.first);
  if (sa > sb) return false;
  return step(a.second, b.second);
}

std::vector<Partition> partitions(int m) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

std::vector<Bipartition> bipartitions(int n) {
  std::vector<Bipartition> out;
  for (int k = n; k >= 0; --k)
    for (auto& a : partitions(k))
      for (auto& b : partitions(n - k)) out.push_back({a, b});
  return out;
}

namespace {

// returns row index where a new cell was created
int row_insert(Tableau& t, int x) {
  for (std::size_t r = 0;; ++r) {
    if (r == t.size()) {
      t.push_back({x});
      return static_cast<int>(r);
    }
    auto& row = t[r];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return static_cast<int>(r);
    }
    std::swap(*it, x);
  }
}

bool standard_tableau(const Tableau& t) {
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (t[r].empty()) return false;
    if (r && t[r].size() > t[r - 1].size()) return false;
    for (std::size_t c = 0; c < t[r].size(); ++c) {
      if (c && t[r][c] <= t[r][c - 1]) return false;
      if (r && t[r][c] <= t[r - 1][c]) return false;
    }
  }
  return true;
}

}  // namespace

bool is_standard(const StdBitableau& t) {
  if (!standard_tableau(t.first) || !standard_tableau(t.second)) return false;
  std::vector<int> all;
  for (int c = 0; c < 2; ++c)
    for (auto& row : t.comp(c)) all.insert(all.end(), row.begin(), row.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<int>(i) + 1) return false;
  return true;
}

RSPair rs_correspondence(const SignedPerm& w) {
  RSPair r;
  for (int i = 1; i <= w.rank(); ++i) {
    int v = w(i);
    int c = v > 0 ? 0 : 1;
    int row = row_insert(r.A.comp(c), std::abs(v));
    auto& rec = r.B.comp(c);
    if (row == static_cast<int>(rec.size())) rec.push_back({});
    rec[row].push_back(i);
  }
  return r;
}

SignedPerm rs_inverse(const StdBitableau& A0, const StdBitableau& B0) {
  if (!is_standard(A0) || !is_standard(B0)) throw MalformedError("rs_inverse: tableaux are not standard");
  if (!(A0.shape() == B0.shape())) throw MalformedError("rs_inverse: shape mismatch");
  StdBitableau A = A0, B = B0;
  int n = A.shape().size();
  std::vector<int> w(n);
  for (int i = n; i >= 1; --i) {
    int c = -1, row = -1;
    for (int cc = 0; cc < 2 && c < 0; ++cc)
      for (std::size_t r = 0; r < B.comp(cc).size(); ++r)
        if (B.comp(cc)[r].back() == i) c = cc, row = static_cast<int>(r);
    if (c < 0) throw MalformedError("rs_inverse: recording tableau has no removable cell for " + std::to_string(i));
    auto& brow = B.comp(c);
    brow[row].pop_back();
    if (brow[row].empty()) brow.erase(brow.begin() + row);
    auto& t = A.comp(c);
    int x = t[row].back();
    t[row].pop_back();
    if (t[row].empty()) t.erase(t.begin() + row);
    for (int r = row - 1; r >= 0; --r) {
      auto it = std::lower_bound(t[r].begin(), t[r].end(), x);
      --it;  // largest entry below x
      std::swap(*it, x);
    }
    w[i - 1] = c == 0 ? x : -x;
  }
  return SignedPerm(std::move(w));
}

Bipartition shape_of(const SignedPerm& w) { return rs_correspondence(w).A.shape(); }

std::vector<StdBitableau> enumerate_std(const Bipartition& lam) {
  int n = lam.size();
  std::vector<StdBitableau> out;
  StdBitableau cur;
  std::function<void(int)> rec = [&](int k) {
    if (k > n) {
      out.push_back(cur);
      return;
    }
    for (int c = 0; c < 2; ++c) {
      const Partition& target = c == 0 ? lam.first : lam.second;
      Tableau& t = cur.comp(c);
      for (std::size_t r = 0; r < target.size(); ++r) {
        std::size_t len = r < t.size() ? t[r].size() : 0;
        if (r > t.size()) break;
        if (static_cast<int>(len) >= target[r]) continue;
        if (r > 0 && t[r - 1].size() <= len) continue;
        if (r == t.size()) t.push_back({});
        t[r].push_back(k);
        rec(k + 1);
        t[r].pop_back();
        if (t[r].empty()) t.pop_back();
      }
    }
  };
  rec(1);
  return out;
}

std::vector<Tableau> enumerate_std(const Partition& p) {
  std::vector<Tableau> out;
  for (auto& b : enumerate_std(Bipartition{p, {}})) out.push_back(b.first);
  return out;
}

long d_lambda(const Bipartition& lam) { return static_cast<long>(enumerate_std(lam).size()); }

std::pair<Tableau, Tableau> rs_type_a(const std::vector<int>& seq) {
  Tableau P, Q;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    int row = row_insert(P, seq[i]);
    if (row == static_cast<int>(Q.size())) Q.push_back({});
    Q[row].push_back(static_cast<int>(i) + 1);
  }
  return {P, Q};
}

std::string partition_text(const Partition& p) {
  if (p.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s;
}

std::string bipartition_text(const Bipartition& b) {
  return "(" + partition_text(b.first) + "|" + partition_text(b.second) + ")";
}

std::string tableau_text(const Tableau& t) {
  std::string s = "[";
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (r) s += ",";
    s += "[";
    for (std::size_t c = 0; c < t[r].size(); ++c) {
      if (c) s += ",";
      s += std::to_string(t[r][c]);
    }
    s += "]";
  }
  return s + "]";
}

std::string bitableau_text(const StdBitableau& t) {
  return "(" + tableau_text(t.first) + "|" + tableau_text(t.second) + ")";
}

Partition parse_partition(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty() || t == "0" || t == "-") return {};
  Partition p;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw MalformedError("bad partition part '" + item + "'");
    int v = std::stoi(item);
    if (v <= 0) throw MalformedError("partition parts must be positive");
    if (!p.empty() && v > p.back()) throw MalformedError("partition parts must be weakly decreasing");
    p.push_back(v);
  }
  return p;
}

Bipartition parse_bipartition(std::string_view text) {
  std::string t(text);
  auto a = t.find('('), bar = t.find('|'), b = t.rfind(')');
  if (a == std::string::npos || bar == std::string::npos || b == std::string::npos || !(a < bar && bar < b))
    throw MalformedError("bipartition must look like (2,1|1)");
  return {parse_partition(t.substr(a + 1, bar - a - 1)), parse_partition(t.substr(bar + 1, b - bar - 1))};
}

}  // namespace hecke
