//
// Copyright 2026 The fairlip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "commands.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <ostream>

#include <json.hpp>

#include "fairlip/affirmative.hpp"
#include "fairlip/error.hpp"
#include "fairlip/expmech.hpp"
#include "fairlip/fairness_lp.hpp"
#include "fairlip/prob_metrics.hpp"
#include "instance_io.hpp"

namespace fairlip::cli {

namespace {

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const InfeasibleParity& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

const std::string& need(const std::optional<std::string>& v, const char* flag) {
  if (!v) throw InvalidArgument(std::string("missing ") + flag);
  return *v;
}

void maybe_write(const CommandOptions& o, const MappingFile& m) {
  if (o.out) write_text(*o.out, mapping_to_json(m));
}

const IndexSet& members_of(const InstanceFile& f, const std::string& name) {
  const NamedGroup& g = f.group(name);
  if (!g.members) {
    throw InvalidArgument("group \"" + name + "\" must be given by members");
  }
  return *g.members;
}

}  // namespace

double tolerance_from_env(double fallback) {
  const char* raw = std::getenv("FAIRLIP_TOL");
  if (raw == nullptr) return fallback;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) return fallback;
  return v;
}

int cmd_solve(const CommandOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const InstanceFile f = load_instance(o.instance);
    const FairSolution sol = solve_fairness(f.instance, o.kind);
    maybe_write(o, MappingFile{f.instance.space().ids(), f.instance.outcomes(), sol.map});
    out << "opt=" << format_number(sol.opt_value) << "\n";
    return kExitOk;
  });
}

int cmd_bias(const CommandOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const InstanceFile f = load_instance(o.instance);
    const std::string& s = need(o.s, "--s");
    const std::string& t = need(o.t, "--t");
    const BiasReport r = bias(o.kind, f.instance.space(), f.group(s).distribution(s),
                              f.group(t).distribution(t));
    maybe_write(o, MappingFile{f.instance.space().ids(), {"favored", "other"}, r.witness});
    out << "bias=" << format_number(r.value) << "\n";
    return kExitOk;
  });
}

int cmd_em(const CommandOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const InstanceFile f = load_instance(o.instance);
    const std::string& s = need(o.s, "--s");
    const std::string& t = need(o.t, "--t");
    const TransportPlan plan = earthmover(f.instance.space(), f.group(s).distribution(s),
                                          f.group(t).distribution(t), o.form);
    if (o.out) {
      nlohmann::json flow = nlohmann::json::array();
      for (std::size_t x = 0; x < plan.flow.rows(); ++x) {
        nlohmann::json row = nlohmann::json::array();
        for (double v : plan.flow.row(x)) row.push_back(round12(v));
        flow.push_back(std::move(row));
      }
      nlohmann::json doc;
      doc["individuals"] = f.instance.space().ids();
      doc["cost"] = round12(plan.cost);
      doc["flow"] = std::move(flow);
      write_text(*o.out, doc.dump(2) + "\n");
    }
    out << "cost=" << format_number(plan.cost) << "\n";
    return kExitOk;
  });
}

int cmd_aa(const CommandOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const InstanceFile f = load_instance(o.instance);
    const std::size_t n = f.instance.individuals();
    const IndexSet& t = members_of(f, need(o.t, "--t"));
    // Without --s, S is everyone outside T.
    IndexSet s;
    if (o.s) {
      s = members_of(f, *o.s);
    } else {
      std::vector<bool> in_t(n, false);
      for (std::size_t y : t) in_t[y] = true;
      for (std::size_t x = 0; x < n; ++x) {
        if (!in_t[x]) s.push_back(x);
      }
    }
    const ComposedMap c = run_affirmative_action(f.instance, s, t, o.epsilon,
                                                 AaOptions{o.kind, o.reweight});
    const ComposedReport r = evaluate_composed(c, f.instance.space(), s, t, o.tol);
    maybe_write(o, MappingFile{f.instance.space().ids(), f.instance.outcomes(), c.map});
    out << "em_cost=" << format_number(c.plan.em_cost) << "\n"
        << "parity_gap=" << format_number(r.parity_gap) << "\n"
        << "loss=" << format_number(expected_loss(f.instance, c.map)) << "\n";
    return kExitOk;
  });
}

int cmd_expmech(const CommandOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const InstanceFile f = load_instance(o.instance);
    const MetricSpace& space = f.instance.space();
    const ExpMechMap m = exp_mechanism(space, o.scale);
    maybe_write(o, MappingFile{space.ids(), space.ids(), m.map});
    out << "lipschitz_constant=" << format_number(lipschitz_constant(m, space)) << "\n"
        << "expected_loss=" << format_number(expected_loss(m, space)) << "\n";
    return kExitOk;
  });
}

int cmd_check(const CommandOptions& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const InstanceFile f = load_instance(o.instance);
    const MappingFile m = load_mapping(o.mapping);
    const MetricSpace& space = f.instance.space();
    if (m.individuals != space.ids()) {
      throw InvalidArgument("mapping individuals do not match the instance");
    }
    const LipschitzReport r = check_lipschitz(m.map, space, o.kind, o.tol);
    out << "max_violation=" << format_number(r.max_violation) << "\n";
    if (r.worst_pair) {
      out << "worst_pair=" << space.ids()[r.worst_pair->first] << ","
          << space.ids()[r.worst_pair->second] << "\n";
    }
    out << "lipschitz=" << (r.lipschitz ? "yes" : "no") << "\n";
    for (auto a = f.groups.begin(); a != f.groups.end(); ++a) {
      for (auto b = std::next(a); b != f.groups.end(); ++b) {
        if (!a->second.weights || !b->second.weights) continue;
        out << "parity_gap[" << a->first << "," << b->first << "]="
            << format_number(parity_gap(m.map, *a->second.weights, *b->second.weights))
            << "\n";
      }
    }
    return r.lipschitz ? kExitOk : kExitViolation;
  });
}

}  // namespace fairlip::cli
