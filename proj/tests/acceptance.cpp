#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "algkit/cli.hpp"
#include "algkit/duality.hpp"
#include "algkit/generate.hpp"
#include "algkit/json_io.hpp"
#include "algkit/lattice.hpp"
#include "algkit/plonka.hpp"
#include "algkit/validate.hpp"
#include "oracles.hpp"
#include "posets.hpp"

using namespace algkit;

namespace {

// Collects failed expectations for one criterion.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ += ok ? 0 : 1;
  }
  bool ok() const { return failed_ == 0; }
  int checks() const { return checks_; }
  int failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

std::string fixture(const std::string& name) { return std::string(ALGKIT_FIXTURES_DIR) + "/" + name; }

std::shared_ptr<const DirectSystem> share(DirectSystem s) { return std::make_shared<const DirectSystem>(std::move(s)); }

FiniteAlgebra ibsl(const char* name) { return prepare_for_kind(builtin(name), Kind::Ibsl); }

template <class T>
std::string str(const T& v) {
  std::ostringstream s;
  s << v;
  return s.str();
}

void builtin_fidelity(Tally& t) {
  // Carrier 0, 1, α. Weak Kleene: α absorbs under both operations.
  const std::vector<int> join{0, 1, 2, 1, 1, 2, 2, 2, 2};
  const std::vector<int> meet{0, 0, 2, 0, 1, 2, 2, 2, 2};
  const std::vector<int> neg{1, 0, 2};
  for (const char* name : {"three", "wk"}) {
    const FiniteAlgebra a = builtin(name);
    t.expect(a.size() == 3, std::string(name) + " has 3 elements");
    t.expect(a.names() == std::vector<std::string>{"0", "1", "α"}, std::string(name) + " names");
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        const auto cell = std::string(name) + " cell " + str(x) + "," + str(y);
        t.expect(a.apply(op::join, x, y) == join[static_cast<std::size_t>(3 * x + y)], cell + " of +");
        t.expect(a.apply(op::meet, x, y) == meet[static_cast<std::size_t>(3 * x + y)], cell + " of .");
      }
  }
  const FiniteAlgebra wk = builtin("wk");
  for (int x = 0; x < 3; ++x) t.expect(wk.apply(op::neg, x) == neg[static_cast<std::size_t>(x)], "wk negation");
  t.expect(wk.constant(op::zero) == 0, "wk zero");
  t.expect(!builtin("three").has_unary(op::neg), "three has no involution");

  for (const char* name : {"two", "s2", "wk"}) {
    t.expect(validate_ibsl(builtin(name)).ok(), std::string(name) + " validates");
    t.expect(oracle::is_ibsl(ibsl(name)), std::string(name) + " satisfies the oracle axioms");
  }
  bool embeds = false;
  for_each_hom(ibsl("two"), ibsl("wk"), Kind::Ibsl, [&](const Map&) { embeds = true; return false; }, true);
  t.expect(embeds, "2 embeds in WK");
  bool onto = false;
  for (const auto& h : enumerate_hom_maps(ibsl("wk"), ibsl("s2"), Kind::Ibsl)) {
    std::vector<char> hit(2, 0);
    for (int v : h) hit[static_cast<std::size_t>(v)] = 1;
    onto = onto || (hit[0] && hit[1]);
  }
  t.expect(onto, "S2 is a homomorphic image of WK");
}

void representation(Tally& t) {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = share(random_ba_system(rng, 3, 8));
    const FiniteAlgebra sum = plonka_sum(*s);
    t.expect(validate_ibsl(sum).ok(), "sum " + str(trial) + " validates");
    const auto back = share(plonka_decompose(sum));
    t.expect(find_system_isomorphism(s, back).has_value(), "decompose(sum) ~ s, trial " + str(trial));
    const FiniteAlgebra shuffled = shuffle(sum, rng);
    t.expect(find_isomorphism(plonka_sum(plonka_decompose(shuffled)), shuffled, Kind::Ibsl).has_value(),
             "sum(decompose(b)) ~ b, trial " + str(trial));
  }
}

void equivalence_pair(Tally& t, const FiniteAlgebra& a0, const FiniteAlgebra& b0, const std::string& tag) {
  const auto da = share(plonka_decompose(a0));
  const auto db = share(plonka_decompose(b0));
  const FiniteAlgebra a = plonka_sum(*da);
  const FiniteAlgebra b = plonka_sum(*db);
  const auto oracle_homs = oracle::homs(a, b, oracle::ibsl);
  const auto homs = enumerate_homs(a, b, Kind::Ibsl);
  const auto sms = enumerate_system_morphisms(da, db);
  t.expect(homs.size() == oracle_homs.size(), tag + ": hom count matches oracle");
  t.expect(sms.size() == homs.size(), tag + ": |Hom| = |system morphisms|");
  std::vector<Map> images;
  for (const auto& h : homs) {
    const SystemMorphism m = restrict_to_fibers(h, da, db);
    t.expect(check_system_morphism(m).ok(), tag + ": restriction is a system morphism");
    t.expect(system_morphism_to_hom(m).map() == h.map(), tag + ": translation is invertible");
    images.push_back(system_morphism_to_hom(m).map());
  }
  for (const auto& m : sms) {
    const Morphism h = system_morphism_to_hom(m);
    t.expect(restrict_to_fibers(h, da, db).same_arrows(m), tag + ": system morphism round trip");
  }
  std::sort(images.begin(), images.end());
  t.expect(std::adjacent_find(images.begin(), images.end()) == images.end(), tag + ": translation is injective");

  t.expect(restrict_to_fibers(Morphism::identity(a, Kind::Ibsl), da, da).same_arrows(identity_system_morphism(da)),
           tag + ": identities");
  const auto ends = enumerate_homs(b, b, Kind::Ibsl);
  for (const auto& f : homs)
    for (std::size_t k = 0; k < ends.size() && k < 4; ++k) {
      const auto& g = ends[k];
      const auto lhs = restrict_to_fibers(compose(g, f), da, db);
      const auto rhs = compose_system_morphisms(restrict_to_fibers(g, db, db), restrict_to_fibers(f, da, db));
      t.expect(lhs.same_arrows(rhs), tag + ": composition");
    }
}

void equivalence(Tally& t) {
  for (const char* x : {"two", "s2", "wk"})
    for (const char* y : {"two", "s2", "wk"}) equivalence_pair(t, ibsl(x), ibsl(y), std::string(x) + "->" + y);
  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial)
    equivalence_pair(t, random_ibsl(rng, 3, 4), random_ibsl(rng, 3, 4), "random " + str(trial));
}

void lifted_duality(Tally& t) {
  Rng rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = share(random_ba_system(rng, 3, 8));
    const SystemMorphism eta = stone_unit_system(s);
    t.expect(check_system_morphism(eta).ok(), "unit is a system morphism, trial " + str(trial));
    bool components = eta.index_map == identity_map(s->index().size());
    for (std::size_t i = 0; i < eta.components.size(); ++i)
      components = components && oracle::is_bijective(eta.components[i], eta.target->fiber(static_cast<int>(i)).size());
    t.expect(components, "unit is componentwise bijective, trial " + str(trial));
  }
  for (int k = 0; k <= 4; ++k)
    for (int trial = 0; trial < 6; ++trial) {
      const FiniteAlgebra b = trial == 0 ? ba_of_space(FiniteSpace{k}) : shuffle(ba_of_space(FiniteSpace{k}), rng);
      const Morphism u = stone_unit(b);
      t.expect(u.is_isomorphism(), "stone unit of the BA of size " + str(b.size()));
      t.expect(oracle::is_hom(b, u.target(), u.map(), oracle::ba), "stone unit is a BA hom");
      t.expect(stone_dual(b).size == oracle::count_atoms(b), "stone dual counts atoms");
    }
}

void main_duality(Tally& t) {
  std::vector<std::pair<std::string, FiniteAlgebra>> corpus;
  for (const char* name : {"two", "s2", "wk"}) corpus.emplace_back(name, ibsl(name));
  corpus.emplace_back("wk.json", prepare_for_kind(algebra_from_json(read_json_file(fixture("wk.json"))), Kind::Ibsl));
  Rng rng(555);
  while (corpus.size() < 40) {
    FiniteAlgebra b = random_ibsl(rng, 3, 4);
    if (b.size() <= 8) corpus.emplace_back("random " + str(corpus.size()), std::move(b));
  }
  for (const auto& [name, b] : corpus) {
    const FiniteAlgebra g = dual_of_ibsl(b);
    t.expect(validate_igr(g).ok(), name + ": dual validates as a GR space with involution");
    t.expect(eps_iso(b).is_isomorphism(), name + ": eps is an isomorphism");
    t.expect(delta_iso(g).is_isomorphism(), name + ": delta is an isomorphism");
  }
  const int wk = dual_of_ibsl(ibsl("wk")).size();
  const int wk_oracle = static_cast<int>(oracle::homs(ibsl("wk"), builtin("three"), oracle::bsl).size());
  t.expect(wk == 4, "|dual(WK)| = 4, got " + str(wk) + " (brute force: " + str(wk_oracle) + ")");
  const int two = dual_of_ibsl(ibsl("two")).size();
  t.expect(two == 4, "|dual(2)| = 4, got " + str(two));
  const FiniteAlgebra three_gr = builtin("three-gr");
  const int d = dual_of_gr(three_gr).size();
  const int d_oracle = static_cast<int>(oracle::homs(three_gr, three_gr, oracle::gr).size());
  t.expect(d == 1 && d_oracle == 1, "|dual(three as GR)| = 1, got " + str(d));
}

void contravariance(Tally& t) {
  const FiniteAlgebra two = ibsl("two"), wk = ibsl("wk"), s2 = ibsl("s2");
  const Morphism f(two, wk, {0, 1}, Kind::Ibsl);
  const Morphism g(wk, s2, {0, 0, 1}, Kind::Ibsl);
  t.expect(dual_of_ibsl_hom(compose(g, f)).map() == compose(dual_of_ibsl_hom(f), dual_of_ibsl_hom(g)).map(),
           "2 -> WK -> S2");
  Rng rng(66);
  int pairs = 0;
  for (int attempt = 0; attempt < 2000 && pairs < 50; ++attempt) {
    const FiniteAlgebra a = random_ibsl(rng, 2, 4), b = random_ibsl(rng, 3, 4), c = random_ibsl(rng, 2, 4);
    if (a.size() > 8 || b.size() > 8 || c.size() > 8) continue;
    const auto fs = enumerate_homs(a, b, Kind::Ibsl);
    const auto gs = enumerate_homs(b, c, Kind::Ibsl);
    if (fs.empty() || gs.empty()) continue;
    const Morphism& fr = fs[static_cast<std::size_t>(rng.below(static_cast<int>(fs.size())))];
    const Morphism& gr = gs[static_cast<std::size_t>(rng.below(static_cast<int>(gs.size())))];
    t.expect(dual_of_ibsl_hom(compose(gr, fr)).map() == compose(dual_of_ibsl_hom(fr), dual_of_ibsl_hom(gr)).map(),
             "random pair " + str(pairs));
    ++pairs;
  }
  t.expect(pairs == 50, "found 50 random composable pairs, got " + str(pairs));
}

void bisemilattices(Tally& t) {
  Rng rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    const FiniteAlgebra b = random_bisemilattice(rng, 3, 6);
    const Decomposition d = plonka_decompose_bsl_with_embedding(b);
    const FiniteAlgebra sum = plonka_sum(d.system);
    t.expect(oracle::is_hom(b, sum, d.embedding, oracle::bsl) && oracle::is_bijective(d.embedding, sum.size()),
             "bisemilattice round trip " + str(trial));
  }

  const auto types = testing_posets::isomorphism_types(16);
  std::vector<int> by_size(17, 0);
  for (const auto& p : types) {
    const FiniteAlgebra l = shuffle(dl_of_poset(p), rng);
    ++by_size[static_cast<std::size_t>(l.size())];
    t.expect(birkhoff_unit(l).is_isomorphism(), "birkhoff unit, size " + str(l.size()));
    t.expect(find_order_isomorphism(priestley_dual(l), p).has_value(), "priestley dual, size " + str(l.size()));
  }
  const std::vector<int> expected{0, 1, 1, 1, 2, 3, 5, 8, 15, 26, 47, 82, 151, 269, 494, 891, 1639};
  t.expect(by_size == expected, "every distributive lattice of size <= 16 is covered");

  for (int n = 0; n <= 4; ++n)
    testing_posets::all_labeled(n, [&](const std::vector<std::uint8_t>& leq) {
      const FinitePoset p(n, leq);
      const FiniteAlgebra l = dl_of_poset(p);
      t.expect(l.size() == oracle::count_down_sets(n, leq), "down-set count");
      const Map u = poset_unit(p);
      const FinitePoset back = priestley_dual(l);
      bool embedding = oracle::is_bijective(u, back.size());
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          embedding = embedding && p.leq(x, y) == back.leq(u[static_cast<std::size_t>(x)], u[static_cast<std::size_t>(y)]);
      t.expect(embedding, "poset unit is an order isomorphism");
      t.expect(birkhoff_unit(l).is_isomorphism(), "birkhoff unit on labeled posets");
    });

  const DirectSystem three = plonka_decompose_bsl(builtin("three"));
  t.expect(three.index().size() == 2 && three.index().leq(0, 1), "decompose(3) is over the 2-chain");
  t.expect(three.fiber_sizes() == std::vector<int>{2, 1}, "decompose(3) fiber sizes 2 and 1");
}

struct Run {
  int code;
  std::string out;
};

Run algctl(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str() + err.str()};
}

void cli_goldens(Tally& t) {
  const Run hom = algctl({"hom", "three", "three", "--count"});
  t.expect(hom.out == "4\n", "hom three three --count prints 4, got " + hom.out.substr(0, hom.out.find('\n')));
  t.expect(algctl({"roundtrip", fixture("wk.json")}).code == 0, "roundtrip wk.json exits 0");
  const Run broken = algctl({"check", fixture("broken-ibsl.json")});
  t.expect(broken.code == 1 && broken.out.find("FAIL  I6  x.(x'+y) = x.y  [x=1, y=0]") != std::string::npos,
           "broken-ibsl.json exits 1 with witness x=1, y=0");
  const Run system = algctl({"check", fixture("nontransitive-system.json")});
  t.expect(system.code == 1 && system.out.find("[i=0, j=1, k=2]") != std::string::npos,
           "nontransitive-system.json exits 1 with witness i=0, j=1, k=2");
  for (const char* kind : {"ibsl", "bsl", "direct-system", "dl-system"})
    for (const char* seed : {"0", "7", "123456789"}) {
      const Run a = algctl({"gen", "--kind", kind, "--seed", seed});
      const Run b = algctl({"gen", "--kind", kind, "--seed", seed});
      t.expect(a.code == 0 && a.out == b.out, std::string("gen ") + kind + " seed " + seed + " is reproducible");
    }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
      {"built-in tables, validation, 2 embeds in WK, S2 image of WK", builtin_fidelity},
      {"Plonka representation round trip on 200 seeded BA systems", representation},
      {"hom <-> system morphism bijection and functoriality", equivalence},
      {"lifted Stone duality and Stone double dual", lifted_duality},
      {"duals of IBSLs validate, eps and delta, concrete sizes", main_duality},
      {"contravariance of the dual functor", contravariance},
      {"bisemilattice decomposition, Priestley and Birkhoff duality", bisemilattices},
      {"CLI goldens", cli_goldens},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(t);
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char line[256];
    std::snprintf(line, sizeof line, "%s  %zu  %s  (%d checks, %d failed, %.2fs)", t.ok() ? "PASS" : "FAIL", i + 1,
                  criteria[i].first.c_str(), t.checks(), t.failed(), secs);
    std::cout << line << "\n";
    for (const auto& f : t.failures()) std::cout << "        " << f << "\n";
    failed += t.ok() ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria pass" : str(failed) + " of " + str(criteria.size()) + " criteria fail")
            << "\n";
  return failed == 0 ? 0 : 1;
}
