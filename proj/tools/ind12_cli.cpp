#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ind12.h"

namespace {

struct GraphHandle {
  ind12_graph* g = nullptr;
  GraphHandle() = default;
  GraphHandle(const GraphHandle&) = delete;
  GraphHandle& operator=(const GraphHandle&) = delete;
  ~GraphHandle() { ind12_graph_free(g); }
};

struct OwnedString {
  char* s = nullptr;
  OwnedString() = default;
  OwnedString(const OwnedString&) = delete;
  OwnedString& operator=(const OwnedString&) = delete;
  ~OwnedString() { ind12_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

int api_error() {
  std::cerr << "error: " << ind12_last_error() << "\n";
  return 2;
}

// exit contract: 0 positive answer, 1 negative answer, 2 error
int finish(int rc) {
  if (rc == IND12_OK) return 0;
  if (rc == IND12_NO) return 1;
  return api_error();
}

int load_graph(const std::string& path, GraphHandle& gh) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read file: " << path << "\n";
    return 2;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  int rc = ind12_graph_parse(ss.str().c_str(), &gh.g);
  if (rc != IND12_OK) return api_error();
  return 0;
}

void print_set(const std::vector<uint32_t>& s, size_t len) {
  for (size_t i = 0; i < len; ++i) {
    if (i) std::cout << ' ';
    std::cout << s[i];
  }
  std::cout << "\n";
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct VerifyFlags {
  bool on = false;
  bool off = false;
  bool enabled(uint32_t n) const { return on || (!off && n <= 20); }
};

// re-check a produced witness with the independent validator
int verified_print(ind12_graph* g, const std::vector<uint32_t>& buf, size_t len,
                   const VerifyFlags& vf) {
  if (vf.enabled(ind12_graph_vertex_count(g))) {
    OwnedString rep;
    int rc = ind12_check_set(g, buf.data(), len, &rep.s);
    if (rc < 0) return api_error();
    if (rc == IND12_NO) {
      std::cerr << "error: produced set failed validation: " << rep.str() << "\n";
      return 2;
    }
  }
  print_set(buf, len);
  return 0;
}

int run_stats_line(ind12_graph* g) {
  uint32_t min_size = 0;
  uint64_t apps = 0;
  auto t0 = std::chrono::steady_clock::now();
  int rc = ind12_tree_stats(g, &min_size, &apps);
  double ms = ms_since(t0);
  if (rc < 0) return api_error();
  std::cout << "n = " << ind12_graph_vertex_count(g) << "\n";
  std::cout << "rule_applications = " << apps << "\n";
  std::cout << "time_ms = " << ms << "\n";
  return -1;  // caller decides the final status
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"independent [1,2]-sets in trees: linear-time decision, minimum witnesses, "
               "structure decompositions, spanning-tree checks, and an exhaustive oracle"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  VerifyFlags vf;
  app.add_flag("--verify", vf.on, "always re-validate produced sets (default for n <= 20)");
  app.add_flag("--no-verify", vf.off, "skip re-validation of produced sets");

  std::string file, tree_file;
  std::vector<uint32_t> set_arg, sizes;
  bool stats = false;
  int32_t contains = -1;
  uint32_t cap = 0, gen_n = 0;
  uint64_t seed = 1, budget = 0;
  double bias = 0.3;
  std::string shape = "path";

  auto* cmd_decide = app.add_subcommand("decide", "does the tree have an independent [1,2]-set");
  cmd_decide->add_option("file", file)->required();
  cmd_decide->add_flag("--stats", stats, "print size, rule applications and wall time");

  auto* cmd_min = app.add_subcommand("min", "minimum size of an independent [1,2]-set");
  cmd_min->add_option("file", file)->required();
  cmd_min->add_flag("--stats", stats, "print size, rule applications and wall time");

  auto* cmd_witness = app.add_subcommand("witness", "print an independent [1,2]-set");
  cmd_witness->add_option("file", file)->required();
  cmd_witness->add_option("--contains", contains, "build a set containing this vertex");
  cmd_witness->add_flag("--stats", stats, "print size, rule applications and wall time");

  auto* cmd_semi = app.add_subcommand("semiexcellent",
                                      "is every vertex in some independent [1,2]-set");
  cmd_semi->add_option("file", file)->required();

  auto* cmd_decomp = app.add_subcommand("decompose", "split into components whose kept side "
                                                     "dominates the tree");
  cmd_decomp->add_option("file", file)->required();

  auto* cmd_check = app.add_subcommand("check-set", "validate a candidate set");
  cmd_check->add_option("file", file)->required();
  cmd_check->add_option("--set", set_arg, "comma-separated vertices")
      ->required()
      ->delimiter(',');

  auto* cmd_spanning = app.add_subcommand("spanning", "spanning-tree condition for general graphs");
  cmd_spanning->require_subcommand(1);
  auto* sp_check = cmd_spanning->add_subcommand("check", "verify a (tree, set) pair against a graph");
  sp_check->add_option("file", file)->required();
  sp_check->add_option("--tree", tree_file, "spanning tree file")->required();
  sp_check->add_option("--set", set_arg, "comma-separated vertices")->required()->delimiter(',');
  auto* sp_construct = cmd_spanning->add_subcommand("construct",
                                                    "build a spanning tree from a valid set");
  sp_construct->add_option("file", file)->required();
  sp_construct->add_option("--set", set_arg, "comma-separated vertices")
      ->required()
      ->delimiter(',');

  auto* cmd_cactus = app.add_subcommand("cactus-decide",
                                        "decide existence on a cactus graph via spanning trees");
  cmd_cactus->add_option("file", file)->required();
  cmd_cactus->add_option("--budget", budget, "cap on examined (tree, set) candidates");

  auto* cmd_oracle = app.add_subcommand("oracle", "exhaustive search on small graphs");
  cmd_oracle->require_subcommand(1);
  auto* or_decide = cmd_oracle->add_subcommand("decide");
  auto* or_min = cmd_oracle->add_subcommand("min");
  auto* or_all = cmd_oracle->add_subcommand("all", "print every set, one line each");
  for (auto* c : {or_decide, or_min, or_all}) {
    c->add_option("file", file)->required();
    c->add_option("--cap", cap, "vertex-count cap (default 20)");
  }

  auto* cmd_gen = app.add_subcommand("gen", "generate test instances");
  cmd_gen->require_subcommand(1);
  auto* gen_tree = cmd_gen->add_subcommand("tree", "uniform random labelled tree");
  gen_tree->add_option("--n", gen_n)->required();
  gen_tree->add_option("--seed", seed);
  auto* gen_cactus = cmd_gen->add_subcommand("cactus", "random cactus graph");
  gen_cactus->add_option("--n", gen_n)->required();
  gen_cactus->add_option("--seed", seed);
  gen_cactus->add_option("--bias", bias, "probability of attaching a cycle (default 0.3)");

  auto* cmd_bench = app.add_subcommand("bench", "timing and rule-count table for the tree solver");
  cmd_bench->add_option("--sizes", sizes, "ascending comma-separated sizes")
      ->required()
      ->delimiter(',');
  cmd_bench->add_option("--shape", shape)->check(CLI::IsMember({"path", "random-tree"}));
  cmd_bench->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*cmd_decide) {
    GraphHandle gh;
    if (int rc = load_graph(file, gh)) return rc;
    if (stats) {
      if (int rc = run_stats_line(gh.g); rc >= 0) return rc;
    }
    int rc = ind12_tree_decide(gh.g);
    if (rc < 0) return api_error();
    std::cout << (rc == IND12_OK ? "YES" : "NO") << "\n";
    return finish(rc);
  }

  if (*cmd_min) {
    GraphHandle gh;
    if (int rc = load_graph(file, gh)) return rc;
    if (stats) {
      if (int rc = run_stats_line(gh.g); rc >= 0) return rc;
    }
    uint32_t m = 0;
    int rc = ind12_tree_min(gh.g, &m);
    if (rc < 0) return api_error();
    if (rc == IND12_NO)
      std::cout << "i12 = none\n";
    else
      std::cout << "i12 = " << m << "\n";
    return finish(rc);
  }

  if (*cmd_witness) {
    GraphHandle gh;
    if (int rc = load_graph(file, gh)) return rc;
    if (stats) {
      if (int rc = run_stats_line(gh.g); rc >= 0) return rc;
    }
    std::vector<uint32_t> buf(std::max<uint32_t>(1, ind12_graph_vertex_count(gh.g)));
    size_t len = 0;
    int rc;
    if (contains >= 0)
      rc = ind12_tree_witness_containing(gh.g, static_cast<uint32_t>(contains), buf.data(),
                                         buf.size(), &len);
    else
      rc = ind12_tree_witness(gh.g, buf.data(), buf.size(), &len);
    if (rc < 0) return api_error();
    if (rc == IND12_NO) {
      std::cout << "none\n";
      return 1;
    }
    return verified_print(gh.g, buf, len, vf);
  }

  if (*cmd_semi) {
    GraphHandle gh;
    if (int rc = load_graph(file, gh)) return rc;
    int rc = ind12_tree_semiexcellent(gh.g);
    if (rc < 0) return api_error();
    std::cout << (rc == IND12_OK ? "YES" : "NO") << "\n";
    return finish(rc);
  }

  if (*cmd_decomp) {
    GraphHandle gh;
    if (int rc = load_graph(file, gh)) return rc;
    OwnedString text;
    int rc = ind12_tree_decompose(gh.g, &text.s);
    if (rc != IND12_OK) return api_error();
    std::cout << text.str();
    return 0;
  }

  if (*cmd_check) {
    GraphHandle gh;
    if (int rc = load_graph(file, gh)) return rc;
    OwnedString rep;
    int rc = ind12_check_set(gh.g, set_arg.data(), set_arg.size(), &rep.s);
    if (rc < 0) return api_error();
    std::cout << rep.str() << "\n";
    return finish(rc);
  }

  if (*sp_check) {
    GraphHandle gh, th;
    if (int rc = load_graph(file, gh)) return rc;
    if (int rc = load_graph(tree_file, th)) return rc;
    OwnedString rep;
    int rc = ind12_spanning_verify(gh.g, th.g, set_arg.data(), set_arg.size(), &rep.s);
    if (rc < 0) return api_error();
    std::cout << rep.str();
    return finish(rc);
  }

  if (*sp_construct) {
    GraphHandle gh;
    if (int rc = load_graph(file, gh)) return rc;
    OwnedString tree_text, rep;
    int rc = ind12_spanning_construct(gh.g, set_arg.data(), set_arg.size(), &tree_text.s, &rep.s);
    if (rc != IND12_OK) return api_error();
    if (vf.enabled(ind12_graph_vertex_count(gh.g))) {
      GraphHandle th;
      OwnedString vrep;
      if (ind12_graph_parse(tree_text.str().c_str(), &th.g) != IND12_OK) return api_error();
      int vrc = ind12_spanning_verify(gh.g, th.g, set_arg.data(), set_arg.size(), &vrep.s);
      if (vrc < 0) return api_error();
      if (vrc == IND12_NO) {
        std::cerr << "error: constructed tree failed verification: " << vrep.str() << "\n";
        return 2;
      }
    }
    std::cout << rep.str() << "tree:\n" << tree_text.str();
    return 0;
  }

  if (*cmd_cactus) {
    GraphHandle gh;
    if (int rc = load_graph(file, gh)) return rc;
    int rc = ind12_cactus_decide(gh.g, budget);
    if (rc < 0) return api_error();
    std::cout << (rc == IND12_OK ? "YES" : "NO") << "\n";
    return finish(rc);
  }

  if (*or_decide) {
    GraphHandle gh;
    if (int rc = load_graph(file, gh)) return rc;
    int rc = ind12_oracle_decide(gh.g, cap);
    if (rc < 0) return api_error();
    std::cout << (rc == IND12_OK ? "YES" : "NO") << "\n";
    return finish(rc);
  }

  if (*or_min) {
    GraphHandle gh;
    if (int rc = load_graph(file, gh)) return rc;
    uint32_t m = 0;
    int rc = ind12_oracle_min(gh.g, cap, &m);
    if (rc < 0) return api_error();
    if (rc == IND12_NO)
      std::cout << "i12 = none\n";
    else
      std::cout << "i12 = " << m << "\n";
    return finish(rc);
  }

  if (*or_all) {
    GraphHandle gh;
    if (int rc = load_graph(file, gh)) return rc;
    OwnedString text;
    int rc = ind12_oracle_sets(gh.g, cap, &text.s);
    if (rc != IND12_OK) return api_error();
    std::cout << text.str();
    return 0;
  }

  if (*gen_tree || *gen_cactus) {
    GraphHandle gh;
    int rc = *gen_tree ? ind12_random_tree(gen_n, seed, &gh.g)
                       : ind12_random_cactus(gen_n, bias, seed, &gh.g);
    if (rc != IND12_OK) return api_error();
    OwnedString text;
    if (ind12_graph_serialize(gh.g, &text.s) != IND12_OK) return api_error();
    std::cout << text.str();
    return 0;
  }

  if (*cmd_bench) {
    for (size_t i = 1; i < sizes.size(); ++i)
      if (sizes[i] <= sizes[i - 1]) {
        std::cerr << "error: sizes must be ascending\n";
        return 2;
      }
    for (uint32_t n : sizes) {
      GraphHandle gh;
      int rc;
      if (shape == "path") {
        std::vector<uint32_t> endpoints;
        endpoints.reserve(2 * (n > 0 ? n - 1 : 0));
        for (uint32_t v = 0; v + 1 < n; ++v) {
          endpoints.push_back(v);
          endpoints.push_back(v + 1);
        }
        rc = ind12_graph_from_edges(n, endpoints.data(), endpoints.size() / 2, &gh.g);
      } else {
        rc = ind12_random_tree(n, seed, &gh.g);
      }
      if (rc != IND12_OK) return api_error();
      uint64_t apps = 0;
      auto t0 = std::chrono::steady_clock::now();
      rc = ind12_tree_stats(gh.g, nullptr, &apps);
      double ms = ms_since(t0);
      if (rc < 0) return api_error();
      std::cout << "n=" << n << " apps=" << apps << " ms=" << ms << "\n";
    }
    return 0;
  }

  std::cerr << "error: no command\n";
  return 2;
}
