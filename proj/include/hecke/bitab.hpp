// Partitions, bipartitions, standard bitableaux and the generalized
// Robinson-Schensted correspondence for signed permutations.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hecke/signedperm.hpp"

namespace hecke {

using Partition = std::vector<int>;
using Tableau = std::vector<std::vector<int>>;

struct Bipartition {
  Partition first, second;
  int size() const;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

struct StdBitableau {
  Tableau first, second;
  Bipartition shape() const;
  const Tableau& comp(int c) const { return c == 0 ? first : second; }
  Tableau& comp(int c) { return c == 0 ? first : second; }
  friend bool operator==(const StdBitableau&, const StdBitableau&) = default;
};

int partition_size(const Partition& p);
Partition tableau_shape(const Tableau& t);
int n_stat(const Partition& p);
Partition conjugate(const Partition& p);
bool dominance_leq(const Partition& a, const Partition& b);
bool dominance_leq(const Bipartition& a, const Bipartition& b);
// partitions of m in decreasing lexicographic order
std::vector<Partition> partitions(int m);
std::vector<Bipartition> bipartitions(int n);

struct RSPair {
  StdBitableau A;  // insertion
  StdBitableau B;  // recording (position indices)
};
RSPair rs_correspondence(const SignedPerm& w);
SignedPerm rs_inverse(const StdBitableau& A, const StdBitableau& B);
Bipartition shape_of(const SignedPerm& w);
std::vector<StdBitableau> enumerate_std(const Bipartition& lam);
long d_lambda(const Bipartition& lam);
std::vector<Tableau> enumerate_std(const Partition& p);
// classical row insertion of seq (values), recording positions 1..n
std::pair<Tableau, Tableau> rs_type_a(const std::vector<int>& seq);
bool is_standard(const StdBitableau& t);

std::string partition_text(const Partition& p);
std::string bipartition_text(const Bipartition& b);
std::string tableau_text(const Tableau& t);
std::string bitableau_text(const StdBitableau& t);
Partition parse_partition(std::string_view text);
Bipartition parse_bipartition(std::string_view text);

}  // namespace hecke
