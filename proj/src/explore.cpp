#include <map>
#include <sstream>

#include "twystoff/infinite.hpp"

namespace twystoff {

namespace {

class BoundedProver {
 public:
  BoundedProver(const InfiniteSolver& solver, Stack budget, std::size_t node_limit)
      : solver_(solver), budget_(budget), node_limit_(node_limit) {}

  DecisionResult prove(const ExtPosition& pos) {
    if (auto it = memo_.find(pos); it != memo_.end()) return it->second;
    if (nodes_ >= node_limit_) {
      limit_hit_ = true;
      return DecisionResult::undecided("node limit reached");
    }
    ++nodes_;
    DecisionResult d = solver_.decide(pos);
    if (d.kind == DecisionResult::Kind::Undecided) d = search(pos);
    if (d.kind == DecisionResult::Kind::N) certificates_.emplace_back(pos, *d.certificate);
    if (d.kind != DecisionResult::Kind::Undecided || !limit_hit_) memo_.emplace(pos, d);
    return d;
  }

  std::size_t nodes() const { return nodes_; }
  bool limit_hit() const { return limit_hit_; }
  std::vector<std::pair<ExtPosition, ExtPosition>>& certificates() { return certificates_; }

 private:
  DecisionResult search(const ExtPosition& pos) {
    const ExtOptions opts = ext_options(pos, budget_);
    bool all_n = !opts.unbounded;
    for (const ExtPosition& option : opts.positions) {
      const DecisionResult r = prove(option);
      if (r.kind == DecisionResult::Kind::P) return DecisionResult::n(option, "bounded search");
      if (r.kind != DecisionResult::Kind::N) all_n = false;
    }
    if (all_n) return DecisionResult::p("bounded search: every option refuted");
    return DecisionResult::undecided(opts.unbounded ? "option families beyond the budget" : "undecided options");
  }

  const InfiniteSolver& solver_;
  Stack budget_;
  std::size_t node_limit_;
  std::size_t nodes_ = 0;
  bool limit_hit_ = false;
  std::map<ExtPosition, DecisionResult> memo_;
  std::vector<std::pair<ExtPosition, ExtPosition>> certificates_;
};

}  // namespace

DecisionResult bounded_prove(const InfiniteSolver& solver, const ExtPosition& pos, Stack budget,
                             std::size_t node_limit) {
  BoundedProver prover(solver, budget, node_limit);
  return prover.prove(ext_normalize(pos));
}

SevenReport explore_seven(const InfiniteSolver& solver, Stack budget, std::size_t node_limit) {
  SevenReport report;
  report.budget = budget;
  report.node_limit = node_limit;
  BoundedProver prover(solver, budget, node_limit);
  const ExtPosition seven(std::vector<ExtStack>(7, kInf));
  for (const ExtPosition& option : ext_options(seven, budget).positions) {
    ++report.options_examined;
    const DecisionResult r = prover.prove(option);
    if (r.kind != DecisionResult::Kind::Undecided) ++report.options_decided;
    if (r.kind == DecisionResult::Kind::P) report.candidates.push_back(option);
  }
  report.positions_explored = prover.nodes();
  report.node_limit_hit = prover.limit_hit();
  report.n_certificates = std::move(prover.certificates());
  if (!report.candidates.empty())
    report.verdict = DecisionResult::n(report.candidates.front(), "bounded search certificate");
  else
    report.verdict = DecisionResult::undecided("open problem: no P option found with reductions <= " +
                                               std::to_string(budget));
  return report;
}

std::string SevenReport::to_string() const {
  std::ostringstream os;
  os << "explore seven: budget=" << budget << " node_limit=" << node_limit << '\n';
  os << "options examined: " << options_examined << ", decided: " << options_decided << '\n';
  os << "positions explored: " << positions_explored << (node_limit_hit ? " (node limit reached)" : "") << '\n';
  os << "N certificates found: " << n_certificates.size() << '\n';
  os << "candidate P options: " << candidates.size() << '\n';
  for (const ExtPosition& c : candidates) os << "  " << c.to_string() << '\n';
  os << "verdict: " << verdict.to_string() << '\n';
  return os.str();
}

}  // namespace twystoff
