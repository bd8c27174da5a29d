#include "grflop/weights.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace grflop {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InputError("partition has a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("partition is not weakly decreasing");
    size_ += parts_[i];
  }
}

bool Partition::fits_in_box(int rows, int cols) const {
  return length() <= rows && (empty() || parts_.front() <= cols);
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i) {
    if (other[i] > parts_[i]) return false;
  }
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> out(empty() ? 0 : parts_.front(), 0);
  for (int p : parts_) {
    for (int c = 0; c < p; ++c) ++out[c];
  }
  return Partition(std::move(out));
}

Partition Partition::complement(int rows, int cols) const {
  if (!fits_in_box(rows, cols)) throw InputError("partition " + to_string() + " is outside the box");
  std::vector<int> out(rows);
  for (int i = 0; i < rows; ++i) out[i] = cols - (*this)[rows - 1 - i];
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  if (empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string token;
  auto flush = [&] {
    std::size_t b = token.find_first_not_of(" \t");
    std::size_t e = token.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty entry in integer list");
    std::string t = token.substr(b, e - b + 1);
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(t, &pos);
    } catch (const std::exception&) {
      throw InputError("not an integer: '" + t + "'");
    }
    if (pos != t.size()) throw InputError("not an integer: '" + t + "'");
    out.push_back(v);
    token.clear();
  };
  for (char c : text) {
    if (c == ',') {
      flush();
    } else {
      token += c;
    }
  }
  if (token.find_first_not_of(" \t") != std::string::npos) {
    flush();
  } else if (!out.empty()) {
    throw InputError("trailing comma in integer list");
  }
  return out;
}

}  // namespace

Partition Partition::parse(std::string_view text) { return Partition(parse_int_list(text)); }

GLWeight::GLWeight(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw InputError("GL weight must have positive length");
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i] > entries_[i - 1]) throw InputError("GL weight is not weakly decreasing");
  }
}

GLWeight GLWeight::from_partition(const Partition& p, int rank) {
  if (p.length() > rank) {
    throw InputError("partition " + p.to_string() + " has more than " + std::to_string(rank) + " rows");
  }
  std::vector<int> e(rank, 0);
  for (int i = 0; i < p.length(); ++i) e[i] = p[i];
  return GLWeight(std::move(e));
}

int GLWeight::sum() const {
  int s = 0;
  for (int e : entries_) s += e;
  return s;
}

GLWeight GLWeight::shifted(int c) const {
  std::vector<int> e = entries_;
  for (int& x : e) x += c;
  return GLWeight(std::move(e));
}

GLWeight GLWeight::dual() const {
  std::vector<int> e(entries_.rbegin(), entries_.rend());
  for (int& x : e) x = -x;
  return GLWeight(std::move(e));
}

GLWeight GLWeight::scaled(int k) const {
  if (k < 0) throw InputError("negative scale would break dominance");
  std::vector<int> e = entries_;
  for (int& x : e) x *= k;
  return GLWeight(std::move(e));
}

Partition GLWeight::to_partition() const {
  if (last() < 0) throw InputError("weight " + to_string() + " has a negative entry");
  return Partition(entries_);
}

std::string GLWeight::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s + "]";
}

namespace {

// Fills the skew shape nu/lambda row by row with mu_k copies of label k.
// Rows are weakly increasing by construction; the checks below enforce
// strictly increasing columns and the lattice (Yamanouchi) condition on the
// right-to-left, top-to-bottom reading word.
class LrSearch {
 public:
  LrSearch(const Partition& lambda, const Partition& mu, int max_rows)
      : lambda_(lambda),
        mu_(mu.parts()),
        labels_(mu.length()),
        rows_(std::min(max_rows, lambda.length() + mu.length())),
        counts_(rows_, std::vector<int>(labels_, 0)),
        used_(labels_, 0) {}

  LrExpansion run() {
    if (lambda_.length() > rows_ && lambda_.length() > 0) return out_;
    row(0);
    return std::move(out_);
  }

 private:
  void row(int j) {
    if (used_ == mu_) {
      record(j);
      return;
    }
    if (j == rows_) return;
    label(j, 0, 0);
  }

  void label(int j, int k, int placed) {
    if (k == labels_) {
      row(j + 1);
      return;
    }
    int room = mu_[k] - used_[k];
    if (k > 0) {
      int above = used_[k - 1] - counts_[j][k - 1];
      room = std::min(room, above - used_[k]);
    }
    int below_col = 0;
    if (j > 0) {
      below_col = lambda_[j - 1];
      for (int i = 0; i < k; ++i) below_col += counts_[j - 1][i];
      room = std::min(room, below_col - lambda_[j] - placed);
    }
    for (int a = 0; a <= room; ++a) {
      counts_[j][k] = a;
      used_[k] += a;
      label(j, k + 1, placed + a);
      used_[k] -= a;
    }
    counts_[j][k] = 0;
  }

  void record(int filled_rows) {
    std::vector<int> nu(std::max(filled_rows, lambda_.length()), 0);
    for (int j = 0; j < static_cast<int>(nu.size()); ++j) {
      nu[j] = lambda_[j];
      if (j < filled_rows) {
        for (int c : counts_[j]) nu[j] += c;
      }
    }
    ++out_[Partition(std::move(nu))];
  }

  const Partition& lambda_;
  std::vector<int> mu_;
  int labels_;
  int rows_;
  std::vector<std::vector<int>> counts_;
  std::vector<int> used_;
  LrExpansion out_;
};

using LrKey = std::tuple<std::vector<int>, std::vector<int>, int>;

std::shared_mutex lr_cache_mutex;
std::map<LrKey, LrExpansion> lr_cache;

}  // namespace

LrExpansion detail::lr_coefficients_uncached(const Partition& lambda, const Partition& mu,
                                             int max_rows) {
  if (max_rows < 1) throw InputError("max_rows must be positive");
  return LrSearch(lambda, mu, max_rows).run();
}

LrExpansion lr_coefficients(const Partition& lambda, const Partition& mu, int max_rows) {
  if (max_rows < 1) throw InputError("max_rows must be positive");
  // c^nu_{lambda,mu} is symmetric; search with the shorter label set.
  const Partition& big = lambda.size() >= mu.size() ? lambda : mu;
  const Partition& small = lambda.size() >= mu.size() ? mu : lambda;
  LrKey key{big.parts(), small.parts(), max_rows};
  {
    std::shared_lock lock(lr_cache_mutex);
    auto it = lr_cache.find(key);
    if (it != lr_cache.end()) return it->second;
  }
  LrExpansion result = detail::lr_coefficients_uncached(big, small, max_rows);
  std::unique_lock lock(lr_cache_mutex);
  return lr_cache.emplace(std::move(key), std::move(result)).first->second;
}

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  if (!nu.contains(lambda) || !nu.contains(mu)) return 0;
  auto expansion = lr_coefficients(lambda, mu, std::max(nu.length(), 1));
  auto it = expansion.find(nu);
  return it == expansion.end() ? 0 : it->second;
}

std::int64_t weyl_dimension(const GLWeight& weight, int n) {
  if (weight.rank() != n) {
    throw InputError("weight " + weight.to_string() + " does not have length " + std::to_string(n));
  }
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= weight[i] - weight[j] + j - i;
      den *= j - i;
    }
  }
  if (num % den != 0) throw std::logic_error("Weyl dimension is not an integer");
  return to_int64(num / den);
}

namespace {

void compositions_into(int remaining, int slot, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (slot + 1 == static_cast<int>(cur.size())) {
    cur[slot] = remaining;
    out.push_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[slot] = v;
    compositions_into(remaining - v, slot + 1, cur, out);
  }
}

void partitions_into(int remaining, int max_part, int rows_left, std::vector<int>& cur,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (rows_left == 0) return;
  for (int v = std::min(remaining, max_part); v >= 1; --v) {
    cur.push_back(v);
    partitions_into(remaining - v, v, rows_left - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> sym_power_compositions(int l, int n) {
  if (l < 0) throw InputError("negative symmetric power");
  if (n < 1) throw InputError("compositions need at least one part");
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  compositions_into(l, 0, cur, out);
  return out;
}

std::vector<Partition> partitions_of(int size, int max_rows) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_into(size, size, max_rows, cur, out);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  for (int s = 0; s <= rows * cols; ++s) {
    std::vector<int> cur;
    std::vector<Partition> sized;
    partitions_into(s, cols, rows, cur, sized);
    out.insert(out.end(), sized.begin(), sized.end());
  }
  return out;
}

}  // namespace grflop
