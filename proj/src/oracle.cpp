#include "ptmon/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

#include "ptmon/combinatorics.hpp"
#include "ptmon/generators.hpp"
#include "ptmon/maps.hpp"

namespace ptmon {

namespace {

using Flat = std::vector<int>;
using Clock = std::chrono::steady_clock;
using Deadline = std::optional<Clock::time_point>;

struct FlatHash {
  std::size_t operator()(const Flat& f) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : f) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

using FlatSet = std::unordered_set<Flat, FlatHash>;

Deadline make_deadline(const SearchBudget& budget) {
  if (!budget.time_limit) {
    return std::nullopt;
  }
  return Clock::now() + *budget.time_limit;
}

void check_deadline(const Deadline& deadline, std::uint64_t progress) {
  if (deadline && Clock::now() > *deadline) {
    throw BudgetExceeded("time limit exceeded", progress);
  }
}

Flat compose_flat(const Flat& f, const Flat& g) {
  Flat out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) {
    out[x] = g[static_cast<std::size_t>(f[x])];
  }
  return out;
}

std::vector<Flat> flats_of(const std::vector<PartTransformation>& elems) {
  std::vector<Flat> out;
  out.reserve(elems.size());
  for (const auto& t : elems) {
    out.push_back(to_flat(t).point_map());
  }
  return out;
}

// Breadth-first right-multiplication closure over flat maps, seeded with the
// identity.  Returns the closure in insertion order.
std::vector<Flat> closure_flat(int degree, const std::vector<Flat>& gens,
                               std::uint64_t cap, const Deadline& deadline) {
  std::vector<Flat> elements;
  FlatSet seen;
  Flat id = identity_map(degree);
  seen.insert(id);
  elements.push_back(id);
  std::size_t frontier_begin = 0;
  while (frontier_begin < elements.size()) {
    std::size_t frontier_end = elements.size();
    check_deadline(deadline, elements.size());
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const Flat& g : gens) {
        Flat product = compose_flat(elements[i], g);
        if (seen.insert(product).second) {
          if (elements.size() >= cap) {
            throw BudgetExceeded(
                "closure exceeds " + std::to_string(cap) + " elements",
                elements.size());
          }
          elements.push_back(std::move(product));
        }
      }
    }
    frontier_begin = frontier_end;
  }
  return elements;
}

// True when the closure of gens is exactly the target set; stops as soon as
// a product leaves the target.
bool generates_flat(int degree, const std::vector<Flat>& gens,
                    const FlatSet& target, const Deadline& deadline) {
  std::vector<Flat> elements;
  FlatSet seen;
  Flat id = identity_map(degree);
  if (!target.contains(id)) {
    return false;
  }
  seen.insert(id);
  elements.push_back(id);
  std::size_t frontier_begin = 0;
  while (frontier_begin < elements.size()) {
    std::size_t frontier_end = elements.size();
    check_deadline(deadline, elements.size());
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const Flat& g : gens) {
        Flat product = compose_flat(elements[i], g);
        if (seen.insert(product).second) {
          if (!target.contains(product)) {
            return false;
          }
          elements.push_back(std::move(product));
        }
      }
    }
    frontier_begin = frontier_end;
  }
  return elements.size() == target.size();
}

FlatSet flat_set_of(const ElementSet& set) {
  FlatSet out;
  out.reserve(static_cast<std::size_t>(set.size()) * 2);
  for (const auto& t : set) {
    out.insert(to_flat(t).point_map());
  }
  return out;
}

// Runs pred over every k-subset of {0, .., n-1}, in lexicographic order for
// a single job and striped across workers otherwise.  Returns the matching
// subsets; with stop_on_first only a first match is sought (which one is
// reported may vary, only existence is meaningful then).
std::vector<std::vector<int>> search_combinations(
    int n, int k, int jobs, bool stop_on_first, const Deadline& deadline,
    const std::function<bool(const std::vector<int>&)>& pred) {
  std::vector<std::vector<int>> matches;
  if (k > n) {
    return matches;
  }
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    std::vector<int> combo(static_cast<std::size_t>(k));
    std::iota(combo.begin(), combo.end(), 0);
    std::uint64_t evaluated = 0;
    while (true) {
      check_deadline(deadline, evaluated);
      if (pred(combo)) {
        matches.push_back(combo);
        if (stop_on_first) {
          return matches;
        }
      }
      ++evaluated;
      int pos = k - 1;
      while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == n - k + pos) {
        --pos;
      }
      if (pos < 0) {
        return matches;
      }
      ++combo[static_cast<std::size_t>(pos)];
      for (int q = pos + 1; q < k; ++q) {
        combo[static_cast<std::size_t>(q)] = combo[static_cast<std::size_t>(q) - 1] + 1;
      }
    }
  }

  std::atomic<bool> stop{false};
  std::vector<std::vector<std::vector<int>>> local(static_cast<std::size_t>(jobs));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  auto worker = [&](int id) {
    try {
      std::vector<int> combo(static_cast<std::size_t>(k));
      std::iota(combo.begin(), combo.end(), 0);
      std::uint64_t index = 0;
      while (true) {
        if (stop.load(std::memory_order_relaxed)) {
          return;
        }
        if (static_cast<int>(index % static_cast<std::uint64_t>(jobs)) == id) {
          check_deadline(deadline, index);
          if (pred(combo)) {
            local[static_cast<std::size_t>(id)].push_back(combo);
            if (stop_on_first) {
              stop.store(true, std::memory_order_relaxed);
              return;
            }
          }
        }
        ++index;
        int pos = k - 1;
        while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == n - k + pos) {
          --pos;
        }
        if (pos < 0) {
          return;
        }
        ++combo[static_cast<std::size_t>(pos)];
        for (int q = pos + 1; q < k; ++q) {
          combo[static_cast<std::size_t>(q)] = combo[static_cast<std::size_t>(q) - 1] + 1;
        }
      }
    } catch (...) {
      errors[static_cast<std::size_t>(id)] = std::current_exception();
      stop.store(true, std::memory_order_relaxed);
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(jobs));
  for (int id = 0; id < jobs; ++id) {
    threads.emplace_back(worker, id);
  }
  for (auto& t : threads) {
    t.join();
  }
  for (auto& err : errors) {
    if (err) {
      std::rethrow_exception(err);
    }
  }
  for (auto& part : local) {
    for (auto& combo : part) {
      matches.push_back(std::move(combo));
    }
  }
  std::sort(matches.begin(), matches.end());
  return matches;
}

// Charges one batch of binomial(n, k) subsets against the budget, throwing
// before any of the batch runs if it does not fit.
void charge_batch(std::uint64_t n, std::uint64_t k, std::uint64_t& used,
                  const SearchBudget& budget, std::uint64_t bound_reached) {
  BigUint batch = binomial(n, k);
  if (BigUint(used) + batch > BigUint(budget.max_subsets)) {
    throw BudgetExceeded("subset search budget exhausted; sizes up to "
                             + std::to_string(bound_reached)
                             + " are fully excluded",
                         bound_reached);
  }
  used += batch.to_uint64();
}

}  // namespace

ElementSet closure(const Partition& p,
                   const std::vector<PartTransformation>& gens,
                   const SearchBudget& budget) {
  for (const auto& g : gens) {
    if (!(g.partition() == p)) {
      throw std::invalid_argument("closure: generator over a different partition");
    }
  }
  auto flats = closure_flat(p.degree(), flats_of(gens),
                            budget.max_closure_elements, make_deadline(budget));
  std::vector<PartTransformation> elements;
  elements.reserve(flats.size());
  for (auto& f : flats) {
    elements.push_back(from_flat(p, std::move(f)));
  }
  return ElementSet(p, std::move(elements));
}

ElementSet closure(const ElementSet& gens, const SearchBudget& budget) {
  return closure(gens.partition(),
                 std::vector<PartTransformation>(gens.begin(), gens.end()),
                 budget);
}

ElementSet enumerate_idempotents(const Partition& p,
                                 const SearchBudget& budget) {
  std::vector<PartTransformation> idempotents;
  for_each_element(
      p,
      [&idempotents](const PartTransformation& t) {
        // Primitive test on the flat map; the block-wise characterisation
        // is checked against this elsewhere.
        Flat f = to_flat(t).point_map();
        for (std::size_t x = 0; x < f.size(); ++x) {
          if (f[static_cast<std::size_t>(f[x])] != f[x]) {
            return;
          }
        }
        idempotents.push_back(t);
      },
      budget.max_closure_elements);
  return ElementSet(p, std::move(idempotents));
}

ElementSet idempotent_generated(const Partition& p,
                                const SearchBudget& budget) {
  return closure(enumerate_idempotents(p, budget), budget);
}

bool generates(const ElementSet& gens, const ElementSet& target,
               const SearchBudget& budget) {
  if (!(gens.partition() == target.partition())) {
    throw std::invalid_argument("generates: sets over different partitions");
  }
  return generates_flat(gens.partition().degree(),
                        flats_of({gens.begin(), gens.end()}),
                        flat_set_of(target), make_deadline(budget));
}

namespace {

// Shared driver: finds the least k such that a k-subset of pool generates
// target, optionally collecting every generating k-subset.
struct SubsetSearch {
  int degree;
  std::vector<Flat> pool;
  FlatSet target;
  Deadline deadline;
  std::uint64_t subsets_used = 0;

  bool batch(int k, int jobs, bool collect, const SearchBudget& budget,
             std::vector<std::vector<int>>& matches) {
    charge_batch(pool.size(), static_cast<std::uint64_t>(k), subsets_used,
                 budget, static_cast<std::uint64_t>(k) - 1);
    auto pred = [this](const std::vector<int>& combo) {
      std::vector<Flat> gens;
      gens.reserve(combo.size());
      for (int i : combo) {
        gens.push_back(pool[static_cast<std::size_t>(i)]);
      }
      return generates_flat(degree, gens, target, deadline);
    };
    matches = search_combinations(static_cast<int>(pool.size()), k, jobs,
                                  !collect, deadline, pred);
    return !matches.empty();
  }
};

SubsetSearch make_search(const Partition& p, const ElementSet& pool_set,
                         const ElementSet& target, const SearchBudget& budget) {
  SubsetSearch search;
  search.degree = p.degree();
  search.deadline = make_deadline(budget);
  PartTransformation id = PartTransformation::identity(p);
  for (const auto& t : pool_set) {
    if (!(t == id)) {
      search.pool.push_back(to_flat(t).point_map());
    }
  }
  search.target = flat_set_of(target);
  return search;
}

}  // namespace

int exhaustive_rank(const Partition& p, bool idempotents_only,
                    const SearchBudget& budget, int jobs) {
  ElementSet target = idempotent_generated(p, budget);
  if (target.size() == 1) {
    return 0;
  }
  ElementSet pool_set
      = idempotents_only ? enumerate_idempotents(p, budget) : target;
  SubsetSearch search = make_search(p, pool_set, target, budget);
  std::vector<std::vector<int>> matches;
  for (int k = 1; k <= static_cast<int>(search.pool.size()); ++k) {
    if (search.batch(k, jobs, false, budget, matches)) {
      return k;
    }
  }
  throw std::logic_error("exhaustive_rank: pool does not generate its closure");
}

namespace {

MigsResult exhaustive_migs_raw(const Partition& p, const SearchBudget& budget,
                               int jobs) {
  MigsResult result;
  ElementSet target = idempotent_generated(p, budget);
  if (target.size() == 1) {
    result.sets.emplace_back(p);  // the empty generating set
    return result;
  }
  ElementSet pool_set = enumerate_idempotents(p, budget);
  SubsetSearch search = make_search(p, pool_set, target, budget);
  // Keep pool elements alongside their flats for reporting.
  PartTransformation id = PartTransformation::identity(p);
  std::vector<PartTransformation> pool_elems;
  for (const auto& t : pool_set) {
    if (!(t == id)) {
      pool_elems.push_back(t);
    }
  }
  std::vector<std::vector<int>> matches;
  for (int k = 1; k <= static_cast<int>(search.pool.size()); ++k) {
    if (search.batch(k, jobs, true, budget, matches)) {
      for (const auto& combo : matches) {
        std::vector<PartTransformation> elems;
        elems.reserve(combo.size());
        for (int i : combo) {
          elems.push_back(pool_elems[static_cast<std::size_t>(i)]);
        }
        result.sets.emplace_back(p, std::move(elems));
      }
      std::sort(result.sets.begin(), result.sets.end());
      return result;
    }
  }
  throw std::logic_error("exhaustive_migs: idempotents do not generate their closure");
}

MigsResult exhaustive_migs_structured(const Partition& p,
                                      const SearchBudget& budget, int jobs) {
  MigsResult result;
  result.assumes_classification = true;
  ElementSet target = idempotent_generated(p, budget);
  Profile prof = profile(p);

  // All minimal idempotent generating sets of each size class, found by raw
  // search inside the class and lifted to the full partition.
  std::vector<std::vector<std::vector<PartTransformation>>> class_options;
  for (int q : prof.occurring_sizes) {
    Partition pc = class_partition(p, q);
    const auto& blocks = prof.blocks_of_size[static_cast<std::size_t>(q)];
    MigsResult class_migs = exhaustive_migs_raw(pc, budget, jobs);
    std::vector<std::vector<PartTransformation>> lifted;
    for (const auto& set : class_migs.sets) {
      std::vector<PartTransformation> elems;
      for (const auto& e : set) {
        elems.push_back(embed_class_element(p, blocks, e));
      }
      lifted.push_back(std::move(elems));
    }
    class_options.push_back(std::move(lifted));
  }

  // Collapse choices: per block and smaller occurring size, a representative
  // block of that size and a surjective component.
  struct CollapseChoice {
    int block;
    std::vector<std::pair<int, std::vector<int>>> options;  // (rep, map)
  };
  std::vector<CollapseChoice> collapse_choices;
  for (int i = 0; i < p.num_blocks(); ++i) {
    for (int s : prof.smaller_sizes[static_cast<std::size_t>(p.size(i))]) {
      CollapseChoice choice;
      choice.block = i;
      for (int rep : prof.blocks_of_size[static_cast<std::size_t>(s)]) {
        for (const auto& f : all_surjections(p.size(i), s)) {
          choice.options.emplace_back(rep, f);
        }
      }
      collapse_choices.push_back(std::move(choice));
    }
  }

  BigUint total{1};
  for (const auto& options : class_options) {
    total *= BigUint(static_cast<std::uint64_t>(options.size()));
  }
  for (const auto& choice : collapse_choices) {
    total *= BigUint(static_cast<std::uint64_t>(choice.options.size()));
  }
  if (total > BigUint(budget.max_subsets)) {
    throw BudgetExceeded("structured enumeration needs " + total.to_decimal()
                             + " candidate sets, budget is "
                             + std::to_string(budget.max_subsets),
                         0);
  }

  // Odometer over all choices.
  std::vector<std::size_t> radix;
  for (const auto& options : class_options) {
    radix.push_back(options.size());
  }
  for (const auto& choice : collapse_choices) {
    radix.push_back(choice.options.size());
  }
  std::vector<std::size_t> digit(radix.size(), 0);
  Deadline deadline = make_deadline(budget);
  while (true) {
    check_deadline(deadline, result.sets.size());
    GeneratingSetSpec spec;
    for (std::size_t c = 0; c < class_options.size(); ++c) {
      spec.class_generators.emplace(
          prof.occurring_sizes[c],
          ElementSet(p, class_options[c][digit[c]]));
    }
    for (std::size_t c = 0; c < collapse_choices.size(); ++c) {
      const auto& choice = collapse_choices[c];
      const auto& [rep, f] = choice.options[digit[class_options.size() + c]];
      spec.collapses.emplace(std::make_pair(choice.block, rep), f);
    }
    ElementSet candidate = minimal_generating_set(p, spec);
    if (generates(candidate, target, budget)) {
      result.sets.push_back(std::move(candidate));
    }
    std::size_t pos = radix.size();
    while (pos > 0 && digit[pos - 1] + 1 == radix[pos - 1]) {
      digit[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) {
      break;
    }
    ++digit[pos - 1];
  }
  std::sort(result.sets.begin(), result.sets.end());
  result.sets.erase(std::unique(result.sets.begin(), result.sets.end()),
                    result.sets.end());
  return result;
}

}  // namespace

MigsResult exhaustive_migs(const Partition& p, const SearchBudget& budget,
                           bool structured, int jobs) {
  return structured ? exhaustive_migs_structured(p, budget, jobs)
                    : exhaustive_migs_raw(p, budget, jobs);
}

bool uniform_membership(const PartTransformation& f) {
  const Partition& p = f.partition();
  if (!p.uniform()) {
    throw std::invalid_argument("uniform_membership: partition is not uniform");
  }
  const auto& fbar = f.block_images();
  if (fbar == identity_map(p.num_blocks())) {
    for (int i = 0; i < p.num_blocks(); ++i) {
      const auto& component = f.block_map(i);
      if (component != identity_map(p.size(i)) && is_permutation(component)) {
        return false;
      }
    }
    return true;
  }
  return !is_permutation(fbar);
}

bool contains_minimal_subset(const ElementSet& gens,
                             const SearchBudget& budget, int jobs) {
  const Partition& p = gens.partition();
  for (const auto& g : gens) {
    if (!is_idempotent(g)) {
      throw std::invalid_argument("contains_minimal_subset: non-idempotent element");
    }
  }
  ElementSet target = idempotent_generated(p, budget);
  if (!generates(gens, target, budget)) {
    throw std::invalid_argument("contains_minimal_subset: set does not generate");
  }
  BigUint idrank = rank_and_idrank(p).idrank;
  if (BigUint(static_cast<std::uint64_t>(gens.size())) < idrank) {
    return false;
  }
  if (BigUint(static_cast<std::uint64_t>(gens.size())) == idrank) {
    return true;  // the set is its own witness
  }
  int k = static_cast<int>(idrank.to_uint64());
  if (k == 0) {
    return true;
  }
  SubsetSearch search;
  search.degree = p.degree();
  search.deadline = make_deadline(budget);
  search.pool = flats_of({gens.begin(), gens.end()});
  search.target = flat_set_of(target);
  std::vector<std::vector<int>> matches;
  return search.batch(k, jobs, false, budget, matches);
}

}  // namespace ptmon
