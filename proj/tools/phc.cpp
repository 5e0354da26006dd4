#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "phc/io.hpp"
#include "phc/kernel.hpp"
#include "phc/lp.hpp"
#include "phc/measure.hpp"
#include "phc/order.hpp"
#include "phc/support_function.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitOrderFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBreakdown = 3;

phc::Norm parse_norm(const std::string& s) {
  if (s == "l1") return phc::Norm::L1;
  if (s == "l2") return phc::Norm::L2;
  throw CLI::ValidationError("--norm must be l1 or l2");
}

phc::Point parse_vector(const std::string& s) {
  phc::Point p;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == ' ') {
      if (!cur.empty()) p.push_back(std::stod(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) p.push_back(std::stod(cur));
  if (p.empty()) throw phc::ParseError("--omega: empty vector");
  return p;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Decision procedures and constructions for stochastic orders of "
               "finitely supported measures"};
  app.require_subcommand(1);

  double tol = phc::kDefaultTol;
  std::uint64_t seed = 42;
  app.add_option("--tol", tol, "decision tolerance")->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized subroutines")
      ->capture_default_str();

  std::string file_a, file_b, relation = "phc", norm_name = "l1", omega_str;
  int coarsen_n = 1;

  auto* check = app.add_subcommand("check-order", "decide a stochastic order");
  check->add_option("--relation", relation, "phc or cx")
      ->check(CLI::IsMember({"phc", "cx"}));
  check->add_option("A", file_a, "source measure file")->required();
  check->add_option("B", file_b, "target measure file")->required();

  auto* findk = app.add_subcommand("find-kernel", "moment-preserving kernel for phc");
  findk->add_option("A", file_a)->required();
  findk->add_option("B", file_b)->required();

  auto* barcost = app.add_subcommand("barcost", "barycentric cost and optimizer");
  barcost->add_option("--norm", norm_name)->check(CLI::IsMember({"l1", "l2"}));
  barcost->add_option("A", file_a)->required();
  barcost->add_option("B", file_b)->required();

  auto* marginal = app.add_subcommand("marginal", "homogeneous marginal");
  marginal->add_option("A", file_a)->required();

  auto* spherek = app.add_subcommand("sphere-kernels",
                                     "sphere kernel and its inverse");
  spherek->add_option("A", file_a)->required();

  auto* coarse = app.add_subcommand("coarsen", "grid coarsening");
  coarse->add_option("--n", coarsen_n, "grid refinement")->required();
  coarse->add_option("A", file_a)->required();

  auto* liftc = app.add_subcommand("lift", "embed into R^{d+1} at height 1");
  liftc->add_option("A", file_a)->required();
  auto* projc = app.add_subcommand("project", "drop the last coordinate");
  projc->add_option("A", file_a)->required();
  auto* flatc = app.add_subcommand("flatten", "flatten onto the hyperplane x_d = 1");
  flatc->add_option("A", file_a)->required();

  auto* wulff = app.add_subcommand("wulff", "Wulff-shape support value");
  wulff->add_option("F", file_a, "spherical samples file")->required();
  wulff->add_option("--omega", omega_str, "probe direction, comma separated")
      ->required();

  auto* w1c = app.add_subcommand("w1", "Wasserstein-1 distance");
  w1c->add_option("--norm", norm_name)->check(CLI::IsMember({"l1", "l2"}));
  w1c->add_option("A", file_a)->required();
  w1c->add_option("B", file_b)->required();

  auto* gluec = app.add_subcommand("glue", "compose two kernels");
  gluec->add_option("P", file_a)->required();
  gluec->add_option("Q", file_b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  if (check->parsed() || findk->parsed()) {
    auto a = phc::load_measure(file_a);
    auto b = phc::load_measure(file_b);
    Timer timer;
    phc::OrderVerdict v = (check->parsed() && relation == "cx")
                              ? phc::check_cx(a, b, tol)
                              : phc::check_phc(a, b, tol);
    phc::VerdictStats stats{v.pivots, timer.elapsed_ms()};
    std::cout << phc::to_json(v, stats) << "\n";
    return v.holds ? kExitOk : kExitOrderFails;
  }
  if (barcost->parsed()) {
    auto a = phc::load_measure(file_a);
    auto b = phc::load_measure(file_b);
    auto r = phc::barycentric_cost(a, b, parse_norm(norm_name), tol);
    std::cout << "{\"value\":" << phc::format_double(r.value) << ",\"norm\":\""
              << norm_name << "\",\"upper_bound\":"
              << (r.l2_is_upper_bound ? "true" : "false")
              << ",\"kernel\":" << phc::to_json(r.argmin) << "}\n";
    return kExitOk;
  }
  if (marginal->parsed()) {
    std::cout << phc::to_json(phc::homogeneous_marginal(phc::load_measure(file_a), tol))
              << "\n";
    return kExitOk;
  }
  if (spherek->parsed()) {
    auto a = phc::load_measure(file_a);
    std::cout << "{\"sphere_kernel\":" << phc::to_json(phc::sphere_kernel(a, tol))
              << ",\"inverse_sphere_kernel\":"
              << phc::to_json(phc::inverse_sphere_kernel(a, tol)) << "}\n";
    return kExitOk;
  }
  if (coarse->parsed()) {
    std::cout << phc::to_json(phc::coarsen(phc::load_measure(file_a), coarsen_n))
              << "\n";
    return kExitOk;
  }
  if (liftc->parsed()) {
    std::cout << phc::to_json(phc::lift(phc::load_measure(file_a))) << "\n";
    return kExitOk;
  }
  if (projc->parsed()) {
    std::cout << phc::to_json(phc::project(phc::load_measure(file_a))) << "\n";
    return kExitOk;
  }
  if (flatc->parsed()) {
    std::cout << phc::to_json(
                     phc::flatten_to_hyperplane(phc::load_measure(file_a), tol))
              << "\n";
    return kExitOk;
  }
  if (wulff->parsed()) {
    auto f = phc::load_spherical_samples(file_a);
    auto omega = parse_vector(omega_str);
    double v = phc::wulff_support(f, omega);
    std::cout << "{\"value\":" << phc::format_double(v) << "}\n";
    return kExitOk;
  }
  if (w1c->parsed()) {
    auto a = phc::load_measure(file_a);
    auto b = phc::load_measure(file_b);
    double v = phc::w1(a, b, parse_norm(norm_name), tol);
    std::cout << "{\"value\":" << phc::format_double(v) << "}\n";
    return kExitOk;
  }
  if (gluec->parsed()) {
    auto p = phc::load_kernel(file_a);
    auto q = phc::load_kernel(file_b);
    std::cout << phc::to_json(phc::glue(p, q, tol)) << "\n";
    return kExitOk;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const phc::NumericalBreakdown& e) {
    std::cerr << "numerical breakdown: " << e.what() << "\n";
    return kExitBreakdown;
  } catch (const phc::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const phc::WulffUnbounded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const phc::WulffInfeasible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
