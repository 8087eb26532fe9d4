#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "booldiff/boolean_function.hpp"
#include "booldiff/errors.hpp"
#include "booldiff/operator.hpp"
#include "booldiff/render.hpp"

namespace booldiff::cli {

namespace {

const std::vector<std::string> kBasisNames = {"ms", "md", "xs", "xd"};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return in;
}

Digraph load_digraph(const std::string& path, unsigned n_max) {
  auto in = open_input(path);
  return read_digraph(in, n_max);
}

void require_same_dim(const Digraph& a, const Digraph& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("inputs have different n (" + std::to_string(a.dim().n()) + " and " +
                         std::to_string(b.dim().n()) + ")");
  }
}

class Output {
 public:
  Output(std::string path, std::ostream& fallback) : path_(std::move(path)), fallback_(fallback) {}

  std::ostream& stream() { return buffer_; }

  void flush() {
    if (path_.empty()) {
      fallback_ << buffer_.str();
      return;
    }
    std::ofstream file(path_, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + path_ + "'");
    file << buffer_.str();
  }

 private:
  std::string path_;
  std::ostream& fallback_;
  std::ostringstream buffer_;
};

}  // namespace

CliConfig config_from_environment() {
  CliConfig config;
  if (const char* env = std::getenv("BOOLDIFF_NMAX"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (*end != '\0' || value > kAbsoluteMaxDimension) {
      throw DomainError("BOOLDIFF_NMAX must be an integer in [0, " +
                        std::to_string(kAbsoluteMaxDimension) + "]");
    }
    config.n_max = static_cast<unsigned>(value);
  }
  return config;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  try {
    config = config_from_environment();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"Boolean differential operators as digraphs on the subset lattice"};
  app.require_subcommand(1);

  std::string basis_text = "ms";
  std::string from_text = "ms";
  std::string to_text = "ms";
  std::string route_text = "auto";
  std::string out_path;
  std::vector<std::string> inputs;
  std::vector<unsigned> dims;

  const auto add_basis = [&](CLI::App* cmd) {
    cmd->add_option("--basis", basis_text, "operator basis")->check(CLI::IsMember(kBasisNames));
  };
  const auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output file (default: stdout)");
  };

  auto* product_cmd = app.add_subcommand("product", "product of two digraphs");
  add_basis(product_cmd);
  product_cmd->add_option("--route", route_text)->check(CLI::IsMember({"direct", "matrix", "auto"}));
  product_cmd->add_option("inputs", inputs, "A.dg B.dg")->required()->expected(2);
  add_out(product_cmd);

  auto* convert_cmd = app.add_subcommand("convert", "re-express a digraph in another basis");
  convert_cmd->add_option("--from", from_text)->required()->check(CLI::IsMember(kBasisNames));
  convert_cmd->add_option("--to", to_text)->required()->check(CLI::IsMember(kBasisNames));
  convert_cmd->add_option("input", inputs, "A.dg")->required()->expected(1);
  add_out(convert_cmd);

  auto* matrix_cmd = app.add_subcommand("matrix", "operator matrix of a digraph");
  add_basis(matrix_cmd);
  matrix_cmd->add_option("input", inputs, "A.dg")->required()->expected(1);
  add_out(matrix_cmd);

  auto* digraph_cmd = app.add_subcommand("digraph", "digraph of an operator matrix");
  add_basis(digraph_cmd);
  digraph_cmd->add_option("input", inputs, "N.mat")->required()->expected(1);
  add_out(digraph_cmd);

  auto* apply_cmd = app.add_subcommand("apply", "apply a digraph's operator to a Boolean function");
  add_basis(apply_cmd);
  apply_cmd->add_option("inputs", inputs, "A.dg f.bf")->required()->expected(2);
  add_out(apply_cmd);

  auto* rank_cmd = app.add_subcommand("rank", "rank, image and kernel sizes of an operator");
  add_basis(rank_cmd);
  rank_cmd->add_option("input", inputs, "A.dg")->required()->expected(1);
  add_out(rank_cmd);

  auto* table_cmd = app.add_subcommand("table", "full multiplication table (n <= 1)");
  add_basis(table_cmd);
  table_cmd->add_option("-n", dims, "dimension")->required()->expected(1);
  add_out(table_cmd);

  auto* jordan_cmd = app.add_subcommand("jordan", "operators of Jordan-like matrices");
  add_basis(jordan_cmd);
  jordan_cmd->add_option("-n", dims, "dimension (repeatable)")->required()->take_all();
  add_out(jordan_cmd);

  auto* render_cmd = app.add_subcommand("render", "plot coordinates of one digraph or a product");
  add_basis(render_cmd);
  render_cmd->add_option("inputs", inputs, "A.dg [B.dg]")->required()->expected(1, 2);
  add_out(render_cmd);

  std::vector<std::string> argv_storage{"booldiff"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const Basis basis = parse_basis(basis_text);
    Output output(out_path, out);
    std::ostream& os = output.stream();

    if (product_cmd->parsed()) {
      const Digraph a = load_digraph(inputs[0], config.n_max);
      const Digraph b = load_digraph(inputs[1], config.n_max);
      require_same_dim(a, b);
      write_digraph(os, product(a, b, basis, parse_route(route_text), config.direct_caps));
    } else if (convert_cmd->parsed()) {
      const Digraph a = load_digraph(inputs[0], config.n_max);
      write_digraph(os, change_operator_basis(a, parse_basis(from_text), parse_basis(to_text)));
    } else if (matrix_cmd->parsed()) {
      write_matrix(os, operator_matrix(load_digraph(inputs[0], config.n_max), basis));
    } else if (digraph_cmd->parsed()) {
      auto in = open_input(inputs[0]);
      write_digraph(os, operator_digraph(read_matrix(in), basis, config.n_max));
    } else if (apply_cmd->parsed()) {
      const Digraph a = load_digraph(inputs[0], config.n_max);
      auto in = open_input(inputs[1]);
      const BooleanFunction f = read_boolean_function(in, config.n_max);
      if (a.dim() != f.dim()) throw DimensionError("digraph and function have different n");
      write_boolean_function(os, apply_operator(a, basis, f));
    } else if (rank_cmd->parsed()) {
      os << operator_rank_profile(load_digraph(inputs[0], config.n_max), basis).to_string() << '\n';
    } else if (table_cmd->parsed()) {
      if (dims[0] > config.n_max) throw CapacityError("n exceeds N_MAX");
      os << multiplication_table(Dimension(dims[0], config.n_max), basis).to_tsv();
    } else if (jordan_cmd->parsed()) {
      for (unsigned k : dims) {
        if (k > config.n_max) {
          throw CapacityError("n=" + std::to_string(k) + " exceeds N_MAX=" +
                              std::to_string(config.n_max));
        }
        os << format_operator(jordan_digraph(Dimension(k, config.n_max), basis), basis) << '\n';
      }
    } else if (render_cmd->parsed()) {
      const Digraph a = load_digraph(inputs[0], config.n_max);
      if (inputs.size() == 1) {
        os << render_digraph(a);
      } else {
        const Digraph b = load_digraph(inputs[1], config.n_max);
        require_same_dim(a, b);
        os << render_product(a, b, product(a, b, basis, Route::Auto, config.direct_caps));
      }
    }
    output.flush();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapacityExceeded;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kDimensionMismatch;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kDimensionMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace booldiff::cli
