#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "graphprod/gamma2.hpp"
#include "graphprod/kernels.hpp"
#include "graphprod/verify.hpp"
#include "graphprod/wall.hpp"
#include "graphprod/word.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gp::SpecError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw gp::SpecError("cannot write file: " + path);
  out << text;
}

gp::PhiTables load_phi(const gp::ProductSpec& spec, const std::string& path) {
  if (path.empty()) return gp::ones_phi(spec);
  return gp::parse_phi_tables(spec, read_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph products of finite groups: words, walls, multiplier norms"};
  app.require_subcommand(1);

  std::string spec_path, phi_path, matrix_path, out_path, format = "csv";
  std::string suite_name;
  std::vector<std::string> words;
  int radius = -1, d = -1;
  double eps = 0.25;
  unsigned seed = 0;
  std::size_t max_ball = 200000;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--spec", spec_path, "group-spec JSON file")->required();
    cmd->add_option("--max-ball", max_ball, "ball enumeration cap");
  };

  auto* c_reduce = app.add_subcommand("reduce", "canonical form of a word");
  add_common(c_reduce);
  c_reduce->add_option("word", words, "word as \"v:e v:e ...\"")->expected(1);

  auto* c_mul = app.add_subcommand("mul", "product of two elements");
  add_common(c_mul);
  c_mul->add_option("words", words, "two elements")->expected(2);

  auto* c_ball = app.add_subcommand("ball", "enumerate elements up to a radius");
  add_common(c_ball);
  c_ball->add_option("--radius", radius, "reduced-length radius")->required();

  auto* c_walls = app.add_subcommand("walls", "walls separating two elements");
  add_common(c_walls);
  c_walls->add_option("words", words, "two elements")->expected(2);

  auto* c_dist = app.add_subcommand("distance", "wall distance between two elements");
  add_common(c_dist);
  c_dist->add_option("words", words, "two elements")->expected(2);

  auto* c_g2 = app.add_subcommand("gamma2", "gamma2 norm of a CSV matrix");
  c_g2->add_option("--matrix", matrix_path, "matrix CSV file")->required();
  c_g2->add_option("--out", out_path, "write the factorization rows here");

  auto* c_ext = app.add_subcommand("extend", "phi_d kernel matrix over a ball");
  add_common(c_ext);
  c_ext->add_option("--phi", phi_path, "vertex function table JSON");
  c_ext->add_option("--radius", radius, "ball radius (default 3)");
  c_ext->add_option("--d", d, "tail depth d (default 3)");
  c_ext->add_option("--out", out_path, "output file (default stdout)");

  auto* c_aid = app.add_subcommand("approx-id", "approximate identity report");
  add_common(c_aid);
  c_aid->add_option("--phi", phi_path, "vertex function table JSON");
  c_aid->add_option("--radius", radius, "support radius of S (default 2)");
  c_aid->add_option("--eps", eps, "target accuracy");
  c_aid->add_option("--out", out_path, "write the F matrix CSV here");

  auto* c_suite = app.add_subcommand("suite", "run a named verification suite");
  add_common(c_suite);
  c_suite->add_option("name", suite_name, "suite name")->required();
  c_suite->add_option("--phi", phi_path, "vertex function table JSON");
  c_suite->add_option("--radius", radius, "ball radius override");
  c_suite->add_option("--d", d, "tail depth override");
  c_suite->add_option("--eps", eps, "target accuracy");
  c_suite->add_option("--seed", seed, "seed for randomized spot checks");
  c_suite->add_option("--format", format, "report format (json)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_g2->parsed()) {
      gp::Factorization f = gp::gamma2(gp::read_kernel_csv(read_file(matrix_path)));
      std::cout.precision(12);
      std::cout << f.value << "\n";
      if (!out_path.empty()) {
        std::ostringstream os;
        os.precision(12);
        for (std::size_t i = 0; i < f.labels.size(); ++i) {
          os << "alpha," << f.labels[i];
          for (int k = 0; k < f.alpha[i].size(); ++k) {
            os << "," << gp::format_complex(f.alpha[i][k]);
          }
          os << "\n";
        }
        for (std::size_t i = 0; i < f.labels.size(); ++i) {
          os << "beta," << f.labels[i];
          for (int k = 0; k < f.beta[i].size(); ++k) {
            os << "," << gp::format_complex(f.beta[i][k]);
          }
          os << "\n";
        }
        write_output(out_path, os.str());
      }
      return 0;
    }

    gp::ProductSpec spec = gp::load_spec_file(spec_path);

    if (c_reduce->parsed()) {
      std::cout << gp::GroupElement::parse(spec, words[0]).str() << "\n";
    } else if (c_mul->parsed()) {
      auto g = gp::GroupElement::parse(spec, words[0]);
      auto h = gp::GroupElement::parse(spec, words[1]);
      std::cout << (g * h).str() << "\n";
    } else if (c_ball->parsed()) {
      auto ball = gp::enumerate_ball(spec, radius, max_ball);
      std::cout << ball.size() << " elements\n";
      for (const auto& g : ball) std::cout << g.str() << "\n";
    } else if (c_walls->parsed()) {
      auto g = gp::GroupElement::parse(spec, words[0]);
      auto h = gp::GroupElement::parse(spec, words[1]);
      for (const auto& w : gp::separating_walls(g, h)) std::cout << w.str() << "\n";
    } else if (c_dist->parsed()) {
      auto g = gp::GroupElement::parse(spec, words[0]);
      auto h = gp::GroupElement::parse(spec, words[1]);
      std::cout << gp::wall_distance(g, h) << "\n";
    } else if (c_ext->parsed()) {
      int r = radius < 0 ? 3 : radius;
      int dd = d < 0 ? 3 : d;
      auto data = gp::prepare_vertex_data(spec, load_phi(spec, phi_path), gp::KernelMode::cb);
      auto ball = gp::enumerate_ball(spec, r, max_ball);
      gp::KernelMatrix km;
      km.entries.resize(ball.size(), ball.size());
      for (std::size_t i = 0; i < ball.size(); ++i) km.labels.push_back(ball[i].str());
      for (std::size_t i = 0; i < ball.size(); ++i) {
        for (std::size_t j = 0; j < ball.size(); ++j) {
          km.entries(i, j) = gp::phi_d(data, ball[i], ball[j], dd);
        }
      }
      write_output(out_path, gp::write_kernel_csv(km));
    } else if (c_aid->parsed()) {
      int r = radius < 0 ? 2 : radius;
      auto S = gp::enumerate_ball(spec, r, max_ball);
      auto rep = gp::approximate_identity(spec, load_phi(spec, phi_path), S, eps, r + 2);
      std::cout << rep.to_json() << "\n";
      if (!out_path.empty()) write_output(out_path, gp::write_kernel_csv(rep.F));
    } else if (c_suite->parsed()) {
      gp::SuiteOptions opts;
      opts.radius = radius;
      opts.d_max = d;
      opts.eps = eps;
      opts.seed = seed;
      opts.max_ball = max_ball;
      gp::PhiTables phi = load_phi(spec, phi_path);
      opts.phi = &phi;
      gp::SuiteReport rep = gp::run_suite(suite_name, spec, opts);
      std::cout << rep.to_json() << "\n";
      if (!rep.passed()) return 1;
    }
  } catch (const gp::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 3;
  } catch (const gp::BallCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
