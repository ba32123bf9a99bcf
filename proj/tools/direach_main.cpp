#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "direach/cli.hpp"

namespace {

std::vector<direach::Vertex> parse_id_list(const std::string& text) {
  std::vector<direach::Vertex> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    if (token.empty()) continue;
    out.push_back(static_cast<direach::Vertex>(std::stol(token)));
  }
  return out;
}

void write_or_print(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S x V reachability and (1+eps)-approximate distances in directed graphs"};
  app.require_subcommand(1);

  direach::RunConfig cfg;
  std::string sources_text;
  std::string grid_text;
  std::string output_path;
  std::string edges_out;
  std::string hops_text = "auto";

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("-i,--input", cfg.input_path, "edge-list file (\"n m\" header)")->required();
    sub->add_flag("--one-indexed", cfg.one_indexed, "vertex ids in the file start at 1");
    sub->add_option("-o,--output", output_path, "write the result here instead of stdout");
    sub->add_option("--seed", cfg.seed, "seed for every randomized choice");
    sub->add_option("--threads", cfg.threads, "worker threads for the matrix kernels");
  };
  const auto add_sources = [&](CLI::App* sub) {
    sub->add_option("--sources", sources_text, "comma-separated source ids");
    sub->add_option("--random-sources", cfg.random_sources,
                    "sample this many distinct sources using --seed");
  };
  const auto add_tree_opts = [&](CLI::App* sub) {
    sub->add_option("--tree", cfg.tree_path, "import a decomposition tree (JSON)");
    sub->add_option("--strategy", cfg.strategy, "separator strategy: bfs|exhaustive|grid");
    sub->add_option("--grid", grid_text, "declared grid dimensions RxC for --strategy grid");
    sub->add_option("--tau", cfg.tau, "leaf threshold of the decomposition");
    sub->add_option("--ratio", cfg.ratio, "balance bound for separators");
    sub->add_flag("--rebalance", cfg.rebalance, "rebalance separators to ratio 1/2");
  };

  CLI::App* reach = app.add_subcommand("reach", "S x V reachability rows");
  add_common(reach);
  add_sources(reach);
  add_tree_opts(reach);
  reach->add_option("--hops", hops_text, "shortcut hop target D, or 'auto'");

  CLI::App* dist = app.add_subcommand("dist", "(1+eps)-approximate S x V distances");
  add_common(dist);
  add_sources(dist);
  add_tree_opts(dist);
  dist->add_option("--epsilon", cfg.epsilon, "stretch budget")->required();

  CLI::App* shortcut = app.add_subcommand("shortcut", "sampled D-shortcut with certification");
  add_common(shortcut);
  shortcut->add_option("--hops", hops_text, "hop target D, or 'auto'");
  shortcut->add_option("--edges-out", edges_out, "also write the edges as 'u v' lines");

  CLI::App* hopset = app.add_subcommand("hopset", "separator-tree hopset with measured stretch");
  add_common(hopset);
  add_tree_opts(hopset);
  hopset->add_option("--epsilon", cfg.epsilon, "stretch budget")->required();
  hopset->add_option("--edges-out", edges_out, "also write the edges as 'u v w' lines");

  CLI::App* decompose = app.add_subcommand("decompose", "build and export a decomposition tree");
  add_common(decompose);
  add_tree_opts(decompose);

  CLI::App* bench = app.add_subcommand("bench", "time the pipeline against BFS per source");
  add_common(bench);
  add_sources(bench);
  bench->add_option("--hops", hops_text, "hop target D, or 'auto'");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!sources_text.empty()) cfg.sources = parse_id_list(sources_text);
    if (!grid_text.empty()) {
      const auto x = grid_text.find('x');
      if (x == std::string::npos) throw std::runtime_error("--grid expects RxC, e.g. 4x4");
      cfg.grid_rows = std::stoi(grid_text.substr(0, x));
      cfg.grid_cols = std::stoi(grid_text.substr(x + 1));
    }
    if (hops_text != "auto") cfg.hops = std::stoi(hops_text);

    const direach::CommandResult result = direach::run_command(cfg);
    write_or_print(result.output, output_path);
    if (!edges_out.empty()) write_or_print(result.edges_text, edges_out);
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
