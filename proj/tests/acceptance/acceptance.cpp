// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "gainrank/catalog.hpp"
#include "gainrank/harness.hpp"
#include "gainrank/hermitian.hpp"
#include "gainrank/theorems.hpp"

using namespace gainrank;

namespace {

constexpr std::uint64_t kSeed = 7;
constexpr double kMaxFragileShare = 0.01;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }

  void absorb(const Report& r) {
    detail << " " << r.claim << ":" << r.trials << "t/" << r.failure_count << "f";
    if (r.fragile) detail << "/" << r.fragile << "fragile";
    if (!r.passed()) {
      ok = false;
      for (const Failure& f : r.failures) {
        detail << "\n    expected " << f.expected << ", observed " << f.observed << "\n" << f.input;
      }
    }
  }
};

Report run(const std::string& claim, int trials, int max_n = 12) { return verify_claim({claim, trials, kSeed, max_n}); }

void cycle_law(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const Report r = run("cycle-inertia", 2000);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.absorb(r);
  o.require(r.forward_checks == 2000 && r.backward_checks == 2000, "forced and random cycles per trial");
  o.detail << " " << seconds << "s";
  o.require(seconds < 10.0, "runtime under 10 s");
}

void pendant_reductions(Outcome& o) {
  o.absorb(run("pendant-pair", 500));
  o.absorb(run("pendant-twins", 500));
}

void cycle_gluing(Outcome& o) { o.absorb(run("cycle-gluing", 500)); }

void tables(Outcome& o) {
  for (CatalogId id : all_catalog_ids()) {
    const Report r = iff_fuzz_table(id, {"", 500, kSeed, 12});
    o.absorb(r);
    if (id == CatalogId::G4) {
      o.require(r.backward_checks == 500, "G4 rank in {5,6} on every sample");
      continue;
    }
    o.require(r.forward_checks == 500 && r.backward_checks == 500, to_string(id) + " witness and sample per trial");
    o.require(r.fragile < kMaxFragileShare * r.trials, to_string(id) + " fragile share below 1%");
  }
}

void bounds(Outcome& o) {
  for (const char* claim : {"infinity-bound", "theta-bound", "theta-zero-bound", "bicyclic-bound"}) {
    o.absorb(run(claim, 500, 14));
  }
  for (auto [p, q] : {std::pair{3, 3}, {4, 4}, {3, 4}}) {
    const int r = rank(sharpness_witness_infinity(p, q));
    const int b = infinity_rank_lower_bound(p, q).lower;
    o.detail << " inf(" << p << "," << q << ")=" << r;
    o.require(r == b && r == 6, "infinity witness attains bound");
  }
  struct Case {
    int p, l, q, want;
  };
  for (Case c : {Case{0, 1, 1, 4}, {1, 1, 1, 4}, {2, 1, 1, 6}}) {
    const int r = rank(sharpness_witness_theta(c.p, c.l, c.q));
    const int b = theta_rank_lower_bound(c.p, c.l, c.q, false).lower;
    o.detail << " theta(" << c.p << "," << c.l << "," << c.q << ")=" << r;
    o.require(r == b && r == c.want, "theta witness attains bound");
  }
}

void oracle_agreement(Outcome& o) { o.absorb(run("sylvester", 1000, 20)); }

void classification_invariance(Outcome& o) { o.absorb(run("cycle-type-invariance", 500)); }

void inequality_suites(Outcome& o) {
  for (const char* claim :
       {"lemma2.1a", "lemma2.1b", "lemma2.1c", "lemma2.5", "lemma2.6", "lemma2.7"}) {
    o.absorb(run(claim, 500));
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*check)(Outcome&);
  };
  const std::vector<Criterion> criteria = {
      {"cycle inertia law", cycle_law},
      {"pendant pair and twin reductions", pendant_reductions},
      {"cycle glued to a graph", cycle_gluing},
      {"catalog rank conditions", tables},
      {"lower bounds and sharpness", bounds},
      {"congruence vs eigenvalue inertia", oracle_agreement},
      {"cycle type traversal invariance", classification_invariance},
      {"inertia inequalities", inequality_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].check(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " exception: " << e.what();
    }
    failed += !o.ok;
    std::printf("%s %zu %s:%s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.str().c_str());
  }
  return failed ? 1 : 0;
}
