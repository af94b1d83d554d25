#include "checkerboard/lattice/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "checkerboard/lattice/counts.hpp"
#include "checkerboard/lattice/oracle.hpp"

namespace checkerboard {
namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = describe();
  }

  SuiteResult result() const { return result_; }

 private:
  SuiteResult result_;
};

std::string mismatch(const std::string& what, const PathCount& formula, const PathCount& oracle) {
  std::ostringstream os;
  os << what << ": formula " << formula.str() << " vs enumeration " << oracle.str();
  return os.str();
}

// Largest unrestricted span enumerated for the wr counts.
constexpr int kMaxUnrestrictedSteps = 16;

void unrestricted_suites(int max_span, std::vector<SuiteResult>& out) {
  Suite l("phi_l_wr vs lattice enumeration");
  Suite r("phi_r_wr vs lattice enumeration");
  Suite reflection("reflection phi_l_wr(R,du,dv) = phi_r_wr(R,dv,du)");
  for (int du = 0; du <= max_span; ++du) {
    for (int dv = 0; dv <= max_span && du + dv <= kMaxUnrestrictedSteps; ++dv) {
      const LatticePathCounts oracle = enumerate_lattice_paths(0, 0, du, dv);
      for (int rc = 0; rc <= std::min(du, dv) + 1; ++rc) {
        const auto where = "R=" + std::to_string(rc) + " du=" + std::to_string(du) +
                           " dv=" + std::to_string(dv);
        const PathCount fl = phi_l_wr(rc, du, dv);
        const PathCount ol = LatticePathCounts::lookup(oracle.all_by_l, rc);
        l.check(fl == ol, [&] { return mismatch(where, fl, ol); });
        const PathCount fr = phi_r_wr(rc, du, dv);
        const PathCount orr = LatticePathCounts::lookup(oracle.all_by_r, rc);
        r.check(fr == orr, [&] { return mismatch(where, fr, orr); });
        const PathCount mirrored = phi_r_wr(rc, dv, du);
        reflection.check(fl == mirrored, [&] { return mismatch(where, fl, mirrored); });
      }
    }
  }
  out.push_back(l.result());
  out.push_back(r.result());
  out.push_back(reflection.result());
}

void restricted_suites(int max_span, std::vector<SuiteResult>& out) {
  Suite l("phi_l_restricted vs lattice enumeration");
  Suite r("phi_r_restricted vs lattice enumeration");
  Suite bound("restricted <= unrestricted");
  for (int b = 0; b <= max_span; ++b) {
    for (int a = 0; a >= b - max_span; --a) {
      const LatticePathCounts oracle = enumerate_lattice_paths(a, 0, b, b);
      for (int rc = 0; rc <= b - a + 1; ++rc) {
        const auto where =
            "R=" + std::to_string(rc) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
        const PathCount fl = phi_l_restricted(rc, a, b);
        const PathCount ol = LatticePathCounts::lookup(oracle.restricted_by_l, rc);
        l.check(fl == ol, [&] { return mismatch(where, fl, ol); });
        const PathCount fr = phi_r_restricted(rc, a, b);
        const PathCount orr = LatticePathCounts::lookup(oracle.restricted_by_r, rc);
        r.check(fr == orr, [&] { return mismatch(where, fr, orr); });
        bound.check(fl <= phi_l_wr(rc, b - a, b) && fr <= phi_r_wr(rc, b - a, b),
                    [&] { return where + ": restricted count exceeds unrestricted"; });
      }
    }
  }
  out.push_back(l.result());
  out.push_back(r.result());
  out.push_back(bound.result());
}

void checkerboard_suites(int max_n, std::vector<SuiteResult>& out) {
  Suite first_pp("phi_first(++) vs checkerboard enumeration");
  Suite first_pm("phi_first(+-) vs checkerboard enumeration");
  Suite mapped("restricted counts on first-arrival grids");
  Suite minus_arrivals("no first arrivals with beta = -");
  Suite reversal_rule("R = reversals - 1 on first-arrival paths");
  Suite full("phi_full vs checkerboard enumeration");

  for (int n = 1; n <= max_n; ++n) {
    for (int p = 0; p <= n; ++p) {
      const GridSpec grid = GridSpec::from_steps(p, n - p);
      const int q = grid.q();
      const CornerTally tally = enumerate_paths(grid, grid.m());
      const std::string g = grid.str();

      for (const auto& [key, count] : tally.entries()) {
        if (!key.first_arrival || key.beta != Sign::Plus) continue;
        const int r_rule = key.alpha == Sign::Plus ? 2 * key.r_r - 1 : 2 * key.r_l;
        // The single reversal-free path on the light cone has no inner corner.
        const bool light_cone = key.reversals == 0;
        reversal_rule.check(light_cone || r_rule == key.reversals - 1,
                            [&] { return g + ": corner rule disagrees with reversal count"; });
      }

      for (Component c : kAllComponents) {
        const Sign beta = arrival_sign(c);
        const Sign alpha = departure_sign(c);
        for (int r = -1; r <= n; ++r) {
          const bool same = beta == alpha;
          if (same != ((r + 1) % 2 == 0)) continue;
          const PathCount f = phi_full(c, r, grid);
          const PathCount o = tally.sum_if([&](const CornerKey& k) {
            return k.alpha == alpha && k.beta == beta && k.reversals == r + 1;
          });
          full.check(f == o, [&] {
            return mismatch(g + " " + std::string(to_string(c)) + " R=" + std::to_string(r), f, o);
          });
        }
      }

      if (grid.m() < 1) continue;

      const PathCount minus = tally.sum_if(
          [](const CornerKey& k) { return k.first_arrival && k.beta == Sign::Minus; });
      minus_arrivals.check(minus.is_zero(), [&] { return g + ": " + minus.str() + " paths"; });

      for (int r = 1; r <= n; r += 2) {
        const int rr = (r + 1) / 2;
        const PathCount f = phi_first(Component::PlusPlus, r, grid);
        const PathCount o = tally.sum_if([&](const CornerKey& k) {
          return k.first_arrival && k.alpha == Sign::Plus && k.beta == Sign::Plus &&
                 k.reversals > 0 && k.r_r == rr;
        });
        first_pp.check(f == o, [&] { return mismatch(g + " R=" + std::to_string(r), f, o); });
        const int a = q + 2 - p;
        if (a <= 0 && q >= 0 && n >= 2) {
          const PathCount rc = phi_r_restricted(rr, a, q);
          mapped.check(rc == o, [&] {
            return mismatch(g + " ++ a=" + std::to_string(a) + " R_r=" + std::to_string(rr), rc, o);
          });
        }
      }
      for (int r = 0; r <= n; r += 2) {
        const int rl = r / 2;
        const PathCount f = phi_first(Component::PlusMinus, r, grid);
        const PathCount o = tally.sum_if([&](const CornerKey& k) {
          return k.first_arrival && k.alpha == Sign::Minus && k.beta == Sign::Plus && k.r_l == rl;
        });
        first_pm.check(f == o, [&] { return mismatch(g + " R=" + std::to_string(r), f, o); });
        const int a = q - p;
        if (q >= 1 && n >= 2) {
          const PathCount lc = phi_l_restricted(rl, a, q - 1);
          mapped.check(lc == o, [&] {
            return mismatch(g + " +- a=" + std::to_string(a) + " R_l=" + std::to_string(rl), lc, o);
          });
        }
      }
    }
  }
  for (const Suite& s : {first_pp, first_pm, mapped, minus_arrivals, reversal_rule, full}) {
    out.push_back(s.result());
  }
}

}  // namespace

std::vector<SuiteResult> verify_counting(int max_n, int max_span) {
  std::vector<SuiteResult> out;
  unrestricted_suites(max_span, out);
  restricted_suites(max_span, out);
  checkerboard_suites(max_n, out);
  return out;
}

}  // namespace checkerboard
