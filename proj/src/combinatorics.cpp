#include "ptmon/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "ptmon/error.hpp"

namespace ptmon {

BigUint binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    return BigUint{0};
  }
  if (k > n - k) {
    k = n - k;
  }
  BigUint out{1};
  for (std::uint64_t i = 1; i <= k; ++i) {
    out *= BigUint(n - k + i);
    // Exact at every step: the partial product is binom(n-k+i, i) * i!/i!.
    if (i > 0xffffffffull) {
      throw std::overflow_error("binomial: argument too large");
    }
    std::uint32_t rem = out.div_small(static_cast<std::uint32_t>(i));
    if (rem != 0) {
      throw std::logic_error("binomial: non-exact division");
    }
  }
  return out;
}

BigUint factorial(std::uint64_t n) {
  BigUint out{1};
  for (std::uint64_t i = 2; i <= n; ++i) {
    out *= BigUint(i);
  }
  return out;
}

BigUint stirling2(std::uint64_t j, std::uint64_t i) {
  if (i > j) {
    return BigUint{0};
  }
  if (j == 0) {
    return BigUint{1};  // i == 0 here
  }
  if (i == 0) {
    return BigUint{0};
  }
  // Row-by-row table S(r, c) = c S(r-1, c) + S(r-1, c-1).
  std::vector<BigUint> row(static_cast<std::size_t>(i) + 1, BigUint{0});
  row[0] = BigUint{1};
  for (std::uint64_t r = 1; r <= j; ++r) {
    std::uint64_t top = std::min(i, r);
    for (std::uint64_t c = top; c >= 1; --c) {
      row[static_cast<std::size_t>(c)]
          = BigUint(c) * row[static_cast<std::size_t>(c)]
            + row[static_cast<std::size_t>(c) - 1];
    }
    row[0] = BigUint{0};
  }
  return row[static_cast<std::size_t>(i)];
}

BigUint surjection_count(std::uint64_t j, std::uint64_t i) {
  return stirling2(j, i) * factorial(i);
}

BigUint injection_count(std::uint64_t i, std::uint64_t j) {
  if (i > j) {
    return BigUint{0};
  }
  BigUint out{1};
  for (std::uint64_t t = 0; t < i; ++t) {
    out *= BigUint(j - t);
  }
  return out;
}

BigUint singular_rank(std::uint64_t n) {
  if (n == 2) {
    return BigUint{2};
  }
  return binomial(n, 2);
}

namespace {

std::uint64_t choose2(std::uint64_t n) { return n * (n - 1) / 2; }

// w_0 .. w_n with w_k = 2^binom(k,2) - sum_{s=1}^{k-1} binom(k,s) w_s
// 2^binom(k-s,2).
std::vector<BigUint> strong_tournament_table(std::uint64_t n) {
  std::vector<BigUint> w(static_cast<std::size_t>(n) + 1);
  w[0] = BigUint{1};
  for (std::uint64_t k = 1; k <= n; ++k) {
    BigUint value = BigUint::pow2(choose2(k));
    for (std::uint64_t s = 1; s < k; ++s) {
      value -= binomial(k, s) * w[static_cast<std::size_t>(s)]
               * BigUint::pow2(choose2(k - s));
    }
    w[static_cast<std::size_t>(k)] = value;
  }
  return w;
}

}  // namespace

BigUint strong_tournament_count(std::uint64_t n) {
  return strong_tournament_table(n)[static_cast<std::size_t>(n)];
}

BigUint singular_migs_count(std::uint64_t n) {
  if (n == 2) {
    return BigUint{1};
  }
  return strong_tournament_count(n);
}

BigUint strong_mixed_tournament_count(std::uint64_t n, std::uint64_t k) {
  auto base = [](std::uint64_t r, std::uint64_t c) {
    if (c > choose2(r)) {
      return BigUint{0};
    }
    return binomial(choose2(r), c) * BigUint::pow2(choose2(r) - c);
  };
  // w[r][c], r <= n, c <= k.
  std::vector<std::vector<BigUint>> w(
      static_cast<std::size_t>(n) + 1,
      std::vector<BigUint>(static_cast<std::size_t>(k) + 1, BigUint{0}));
  w[0][0] = BigUint{1};
  for (std::uint64_t r = 1; r <= n; ++r) {
    for (std::uint64_t c = 0; c <= k; ++c) {
      BigUint value = base(r, c);
      for (std::uint64_t s = 1; s < r; ++s) {
        BigUint inner;
        for (std::uint64_t l = 0; l <= c; ++l) {
          inner += w[static_cast<std::size_t>(s)][static_cast<std::size_t>(l)]
                   * base(r - s, c - l);
        }
        value -= binomial(r, s) * inner;
      }
      w[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = value;
    }
  }
  return w[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigUint uniform_rank(std::uint64_t m, std::uint64_t n) {
  if (m == 0) {
    return BigUint{0};
  }
  if (m == 2 && n == 1) {
    return BigUint{2};
  }
  return BigUint(m) * singular_rank(n) + factorial(n) * binomial(m, 2);
}

BigUint uniform_migs_count(std::uint64_t m, std::uint64_t n) {
  if (m == 0) {
    return BigUint{1};
  }
  if (m == 1) {
    return singular_migs_count(n);
  }
  if (n == 1) {
    return singular_migs_count(m);
  }
  BigUint nfact = factorial(n);
  // 2^(n!) grows past any usable size quickly; refuse exponents beyond 2^25.
  if (!nfact.fits_uint64() || nfact.to_uint64() > (std::uint64_t{1} << 25)) {
    throw BudgetExceeded(
        "uniform_migs_count: 2^(n!) exponent too large for block size "
            + std::to_string(n),
        0);
  }
  BigUint splits = BigUint::pow2(nfact.to_uint64()) - BigUint{2};
  BigUint total;
  std::uint64_t pairs = choose2(m);
  for (std::uint64_t k = 0; k <= pairs; ++k) {
    total += strong_mixed_tournament_count(m, k) * BigUint::pow(splits, k);
  }
  return BigUint::pow(singular_migs_count(n), m) * total;
}

namespace {

BigUint idempotent_count_rec(std::vector<int> sizes,
                             std::map<std::vector<int>, BigUint>& memo) {
  if (sizes.empty()) {
    return BigUint{1};
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  auto it = memo.find(sizes);
  if (it != memo.end()) {
    return it->second;
  }
  // Sum over the kernel class A of block 0 under the induced block map.
  // The count only depends on the multiset of sizes in A and outside A.
  int m = static_cast<int>(sizes.size());
  BigUint total;
  std::uint64_t masks = std::uint64_t{1} << (m - 1);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    std::vector<int> inside{sizes[0]};
    std::vector<int> outside;
    std::uint64_t n_inside = static_cast<std::uint64_t>(sizes[0]);
    for (int b = 1; b < m; ++b) {
      if (mask & (std::uint64_t{1} << (b - 1))) {
        inside.push_back(sizes[static_cast<std::size_t>(b)]);
        n_inside += static_cast<std::uint64_t>(sizes[static_cast<std::size_t>(b)]);
      } else {
        outside.push_back(sizes[static_cast<std::size_t>(b)]);
      }
    }
    // Choices inside A: pick the image block a, the image of the component
    // at a (l identically-fixed points), and the images of the remaining
    // n_A - l points inside those l points.
    BigUint inner;
    for (int a_size : inside) {
      for (std::uint64_t l = 1; l <= static_cast<std::uint64_t>(a_size); ++l) {
        inner += binomial(static_cast<std::uint64_t>(a_size), l)
                 * BigUint::pow(BigUint(l), n_inside - l);
      }
    }
    total += inner * idempotent_count_rec(outside, memo);
  }
  memo.emplace(std::move(sizes), total);
  return total;
}

}  // namespace

BigUint idempotent_count(const Partition& p) {
  std::map<std::vector<int>, BigUint> memo;
  return idempotent_count_rec(p.sizes(), memo);
}

RankResult rank_and_idrank(const Partition& p) {
  RankResult out;
  if (p.num_blocks() == 0) {
    out.rank = out.idrank = out.rho = BigUint{0};
    return out;
  }
  if (p.uniform()) {
    BigUint r = uniform_rank(static_cast<std::uint64_t>(p.num_blocks()),
                             static_cast<std::uint64_t>(p.size(0)));
    out.rank = out.idrank = out.rho = r;
    return out;
  }
  Profile prof = profile(p);
  BigUint rho;
  for (int i : prof.occurring_sizes) {
    std::uint64_t mu = static_cast<std::uint64_t>(prof.mu[static_cast<std::size_t>(i)]);
    std::uint64_t nu = static_cast<std::uint64_t>(prof.nu[static_cast<std::size_t>(i)]);
    rho += BigUint(mu) * singular_rank(static_cast<std::uint64_t>(i));
    rho += factorial(static_cast<std::uint64_t>(i)) * binomial(mu, 2);
    rho += BigUint(mu * nu);
  }
  for (int i : prof.occurring_sizes) {
    for (int j : prof.occurring_sizes) {
      if (i < j) {
        std::uint64_t mu_i = static_cast<std::uint64_t>(prof.mu[static_cast<std::size_t>(i)]);
        std::uint64_t mu_j = static_cast<std::uint64_t>(prof.mu[static_cast<std::size_t>(j)]);
        rho += BigUint(mu_i * mu_j)
               * injection_count(static_cast<std::uint64_t>(i),
                                 static_cast<std::uint64_t>(j));
      }
    }
  }
  out.special_mu1_eq_2 = (prof.mu[1] == 2);
  out.rho = rho;
  out.rank = rho;
  out.idrank = out.special_mu1_eq_2 ? rho + BigUint{1} : rho;
  return out;
}

BigUint migs_count(const Partition& p) {
  if (p.num_blocks() == 0) {
    return BigUint{1};
  }
  if (p.uniform()) {
    return uniform_migs_count(static_cast<std::uint64_t>(p.num_blocks()),
                              static_cast<std::uint64_t>(p.size(0)));
  }
  Profile prof = profile(p);
  BigUint out{1};
  for (int i : prof.occurring_sizes) {
    out *= uniform_migs_count(
        static_cast<std::uint64_t>(prof.mu[static_cast<std::size_t>(i)]),
        static_cast<std::uint64_t>(i));
  }
  for (int i : prof.occurring_sizes) {
    for (int j : prof.occurring_sizes) {
      if (i < j) {
        std::uint64_t mu_i = static_cast<std::uint64_t>(prof.mu[static_cast<std::size_t>(i)]);
        std::uint64_t mu_j = static_cast<std::uint64_t>(prof.mu[static_cast<std::size_t>(j)]);
        out *= BigUint(mu_i * mu_j)
               * stirling2(static_cast<std::uint64_t>(j),
                           static_cast<std::uint64_t>(i))
               * factorial(static_cast<std::uint64_t>(i));
      }
    }
  }
  return out;
}

}  // namespace ptmon
