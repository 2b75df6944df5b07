#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <thread>

#include "descartes/certifier.hpp"
#include "descartes/error.hpp"
#include "descartes/realizer.hpp"

namespace descartes {

namespace {

int worker_count(int requested) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("REALIZER_THREADS")) n = std::atoi(env);
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return std::max(1, n);
}

// The four images of p under the two involutions.
std::vector<Polynomial> orbit_images(const Polynomial& p) {
  std::vector<Polynomial> out{p, reflect(p)};
  if (p.coeff(0) != 0) {
    out.push_back(reverse(p));
    out.push_back(reverse(reflect(p)));
  }
  return out;
}

std::optional<Polynomial> transfer(const Polynomial& p, const Couple& target) {
  for (const auto& q : orbit_images(p))
    if (realizes(q, target)) return q;
  return std::nullopt;
}

// Constructions from the three-root theorems and the hyperbolic realizer.
std::optional<std::pair<Polynomial, std::string>> construct(const Couple& c) {
  const SignPattern& sp = c.pattern;
  const auto [pos, neg] = c.pair;
  try {
    if (pos + neg == sp.degree()) return std::make_pair(realize_hyperbolic_canonical(sp), std::string("hyperbolic"));
    if (pos == 2 && neg == 1) return std::make_pair(realize_21(sp), std::string("two_one"));
    if (pos == 1 && neg == 2)
      return std::make_pair(reflect(realize_21(reflect_pattern(sp))), std::string("two_one_reflected"));
    if (pos == 3 && neg == 0 && !is_D(sp)) return std::make_pair(realize_30(sp), std::string("three_zero"));
    if (pos == 0 && neg == 3 && !is_D(reflect_pattern(sp)))
      return std::make_pair(reflect(realize_30(reflect_pattern(sp))), std::string("three_zero_reflected"));
  } catch (const Error&) {
  }
  return std::nullopt;
}

std::optional<DbisCertificate> d_certificate(const Couple& c) {
  auto shape = is_D(c.pattern);
  if (!shape || c.pair.neg != 0 || c.pair.pos % 2 == 0) return std::nullopt;
  const int j = (c.pair.pos - 1) / 2;
  if (j < 1 || j > shape->b) return std::nullopt;
  return dbis_certificate(shape->a, shape->b, shape->c);
}

struct OrbitJob {
  std::vector<std::size_t> members;  // indices into the couple list, ascending
};

void resolve_orbit(const OrbitJob& job, std::vector<SurveyEntry>& entries, const SurveyOptions& options) {
  auto set_all = [&](auto&& fill) {
    for (auto i : job.members) fill(entries[i]);
  };

  // impossibility through a D pattern anywhere in the orbit
  for (auto i : job.members) {
    if (auto cert = d_certificate(entries[i].couple)) {
      const std::string source = entries[i].couple.str();
      set_all([&](SurveyEntry& e) {
        e.status = SurveyStatus::impossible_certified;
        e.dbis = *cert;
        e.method = e.couple == entries[i].couple ? "d_pattern" : "d_pattern_orbit:" + source;
      });
      return;
    }
  }

  if (options.use_pair_theorem) {
    for (auto i : job.members) {
      const Couple& c = entries[i].couple;
      if (c.pair.pos + c.pair.neg == 2 && c.pattern.degree() % 2 == 0 && !theorem2_realizable(c.pattern, c.pair)) {
        const std::string source = c.str();
        set_all([&](SurveyEntry& e) {
          e.status = SurveyStatus::impossible_certified;
          e.certificate = "two real roots, even degree, Case " +
                          std::string(c.pair.pos == 2 ? "1" : "2") + " clauses hold for " + source;
          e.method = "pair_theorem";
        });
        return;
      }
    }
  }

  std::optional<Polynomial> witness;
  std::string method;
  SurveyStatus status = SurveyStatus::unresolved;
  std::size_t source = job.members.front();
  for (auto i : job.members) {
    if (auto built = construct(entries[i].couple)) {
      witness = built->first;
      method = built->second;
      status = SurveyStatus::realized_constructive;
      source = i;
      break;
    }
  }
  if (!witness) {
    const std::size_t rep = job.members.front();
    witness = random_search(entries[rep].couple, options.budget, options.seed ^ static_cast<std::uint64_t>(rep));
    if (witness) {
      method = "random_search";
      status = SurveyStatus::realized_search;
      source = rep;
    }
  }
  if (!witness) {
    set_all([&](SurveyEntry& e) { e.method = "search_exhausted"; });
    return;
  }
  for (auto i : job.members) {
    SurveyEntry& e = entries[i];
    auto w = i == source ? witness : transfer(*witness, e.couple);
    if (!w) {
      e.method = "orbit_transfer_failed";
      continue;
    }
    e.witness = *w;
    e.status = status;
    e.method = i == source ? method : method + "+orbit";
  }
}

}  // namespace

SurveyEntry resolve_couple(const Couple& couple, const SurveyOptions& options) {
  if (!compatible(couple.pattern, couple.pair)) throw Incompatible(couple.str() + " is not compatible");
  std::vector<SurveyEntry> entries;
  OrbitJob job;
  for (const auto& c : z2z2_orbit(couple)) {
    job.members.push_back(entries.size());
    entries.push_back(SurveyEntry{c});
  }
  resolve_orbit(job, entries, options);
  for (auto& e : entries)
    if (e.couple == couple) return e;
  throw Error("couple missing from its own orbit");
}

std::vector<SurveyEntry> survey(int d, const SurveyOptions& options) {
  if (d < 1) throw PreconditionViolated("survey needs d >= 1");
  if (d > options.cap) throw CapExceeded("degree " + std::to_string(d) + " exceeds the cap " + std::to_string(options.cap));

  std::vector<SurveyEntry> entries;
  std::map<Couple, std::size_t> index;
  for (const auto& sp : all_patterns(d))
    for (const auto& pair : compatible_pairs(sp)) {
      index.emplace(Couple{sp, pair}, entries.size());
      entries.push_back(SurveyEntry{Couple{sp, pair}});
    }

  std::vector<OrbitJob> jobs;
  std::vector<bool> assigned(entries.size(), false);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (assigned[i]) continue;
    OrbitJob job;
    for (const auto& c : z2z2_orbit(entries[i].couple)) {
      const std::size_t k = index.at(c);
      assigned[k] = true;
      job.members.push_back(k);
    }
    std::sort(job.members.begin(), job.members.end());
    jobs.push_back(std::move(job));
  }

  // orbits touch disjoint entries, so workers only share the job counter
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) resolve_orbit(jobs[j], entries, options);
  };
  const int n = std::min<int>(worker_count(options.threads), static_cast<int>(jobs.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return entries;
}

}  // namespace descartes
