#include "cli.hpp"

#include "solcm/solcm.h"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <memory>
#include <ostream>

namespace solcm_cli {

namespace {

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using PrimeSetPtr = std::unique_ptr<solcm_prime_set, Deleter<solcm_prime_set, solcm_prime_set_free>>;
using RingPtr = std::unique_ptr<solcm_ring, Deleter<solcm_ring, solcm_ring_free>>;
using ReportPtr = std::unique_ptr<solcm_report, Deleter<solcm_report, solcm_report_free>>;

// Thrown to unwind with a status code once the message has been printed.
struct Failure {
  solcm_status status;
};

void check(solcm_status s) {
  if (s != SOLCM_OK)
    throw Failure{s};
}

int exit_code(solcm_status s) {
  switch (s) {
  case SOLCM_OK:
    return 0;
  case SOLCM_ERR_INVALID:
    return 2;
  default:
    return 3;
  }
}

PrimeSetPtr primes(const std::string& spec) {
  solcm_prime_set* p = nullptr;
  check(solcm_prime_set_parse(spec.c_str(), &p));
  return PrimeSetPtr(p);
}

RingPtr ring(const std::string& spec) {
  solcm_ring* r = nullptr;
  check(solcm_ring_parse(spec.c_str(), &r));
  return RingPtr(r);
}

std::string take(char* s) {
  std::string out(s);
  solcm_string_free(s);
  return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homological verifier for solenoid quotients of S3", "solcm"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  bool trace = false;
  std::size_t depth = 64;
  app.add_flag("--json", json, "Emit the machine-readable report");
  app.add_flag("--trace", trace, "Include derivations");
  app.add_option("--depth", depth, "Search depth for truncated towers")->check(CLI::Range(2, 4096));

  std::string q, coeff = "Z", prime_spec, base, op;
  std::function<solcm_report*()> action;

  auto wrap = [&](auto&& call) {
    return [&, call]() -> solcm_report* {
      solcm_report* r = nullptr;
      check(call(&r));
      return r;
    };
  };

  auto* lens = app.add_subcommand("lens", "Homology and cohomology of the lens space L(q,1)");
  lens->add_option("--q", q, "Order q >= 1")->required();
  lens->add_option("--coeff", coeff, "Z, Q or mod:<m>");
  lens->callback([&] {
    action = wrap([&](solcm_report** r) { return solcm_lens(q.c_str(), ring(coeff).get(), r); });
  });

  auto* suspend = app.add_subcommand("suspend", "Homology of the suspension of L(q,1)");
  suspend->add_option("--q", q, "Order q >= 1")->required();
  suspend->add_option("--coeff", coeff, "Z, Q or mod:<m>");
  suspend->callback([&] {
    action = wrap([&](solcm_report** r) { return solcm_suspend(q.c_str(), ring(coeff).get(), r); });
  });

  using SolenoidFn = solcm_status (*)(const solcm_prime_set*, const solcm_ring*, solcm_report**);
  const std::vector<std::tuple<const char*, const char*, SolenoidFn>> solenoid = {
      {"local", "Cohomology of S3/X relative to the wild point", solcm_local},
      {"complement", "Cohomology of S3 - X", solcm_complement},
      {"pair", "Cohomology of the pair (S3/X, S3 - X)", solcm_pair},
      {"clc", "Local connectedness in cohomology at the wild point", solcm_clc},
      {"classify", "Cohomology and homology manifold verdict", solcm_classify},
  };
  for (const auto& [name, help, fn] : solenoid) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--primes", prime_spec, "2,3,5 | all | all-except:2,7")->required();
    sub->add_option("--coeff", coeff, "Z, Q or mod:<m>")->required();
    sub->callback([&, f = fn] {
      action = wrap([&, f](solcm_report** r) {
        return f(primes(prime_spec).get(), ring(coeff).get(), r);
      });
    });
  }

  auto* tower = app.add_subcommand("tower", "lim, lim1 or colim of a multiplication tower");
  tower->add_option("op", op, "lim | lim1 | colim")
      ->required()
      ->check(CLI::IsMember({"lim", "lim1", "colim"}));
  tower->add_option("--base", base, "Z, Q or mod:<m>")->required();
  tower->add_option("--primes", prime_spec, "2,3,5 | all | all-except:2,7")->required();
  tower->callback([&] {
    action = wrap([&](solcm_report** r) {
      const solcm_tower_op o = op == "lim"    ? SOLCM_TOWER_LIM
                               : op == "lim1" ? SOLCM_TOWER_LIM1
                                              : SOLCM_TOWER_COLIM;
      return solcm_tower(o, ring(base).get(), primes(prime_spec).get(), depth, r);
    });
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    ReportPtr report(action());
    std::string command;
    for (const std::string& a : args)
      command += (command.empty() ? "" : " ") + a;
    check(solcm_report_set_command(report.get(), command.c_str()));
    char* text = nullptr;
    check(json ? solcm_report_json(report.get(), trace, &text)
               : solcm_report_text(report.get(), trace, &text));
    out << take(text);
    return 0;
  } catch (const Failure& f) {
    err << "error: " << solcm_last_error() << '\n';
    return exit_code(f.status);
  }
}

} // namespace solcm_cli
