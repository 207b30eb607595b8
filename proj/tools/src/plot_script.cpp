#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "polyapprox/errors.hpp"
#include "polyapprox_cli/cli.hpp"

namespace polyapprox::cli {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream s(line);
  while (std::getline(s, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

// Numbers pass through verbatim; anything else becomes None.
std::string py_value(const std::string& cell) {
  if (cell.empty() || cell == "nan") return "None";
  if (cell == "inf") return "float('inf')";
  if (cell == "-inf") return "float('-inf')";
  return cell;
}

std::string py_list(const std::vector<std::string>& cells) {
  std::string s = "[";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) s += ", ";
    s += py_value(cells[i]);
  }
  return s + "]";
}

const char* kPrelude =
    "import matplotlib\n"
    "matplotlib.use('Agg')\n"
    "import matplotlib.pyplot as plt\n";

}  // namespace

std::string plot_script(const std::string& csv_text, const std::string& source_name) {
  std::istringstream in(csv_text);
  std::string header;
  std::getline(in, header);
  if (!header.empty() && header.back() == '\r') header.pop_back();
  std::vector<std::vector<std::string>> rows;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) rows.push_back(split(line));
  }

  const std::string png = source_name + ".png";
  std::ostringstream py;
  py << "# plot for " << source_name << "\n" << kPrelude;

  if (header.empty()) {
    py << "# WARNING: empty CSV, nothing to plot\n"
       << "fig, ax = plt.subplots()\n"
       << "ax.set_title('" << source_name << " (empty)')\n"
       << "fig.savefig('" << png << "')\n";
    return py.str();
  }

  const auto cols = split(header);
  for (const auto& r : rows) {
    if (r.size() != cols.size()) {
      throw Error(ErrorKind::kConfigError,
                  "csv: row with " + std::to_string(r.size()) + " cells under a " +
                      std::to_string(cols.size()) + "-column header");
    }
  }
  if (rows.empty()) py << "# WARNING: CSV has a header but no rows\n";

  const auto column = [&](std::size_t k) {
    std::vector<std::string> v;
    for (const auto& r : rows) v.push_back(r[k]);
    return v;
  };

  if (header == "n,monomial_norm") {
    py << "n = " << py_list(column(0)) << "\n"
       << "norm = " << py_list(column(1)) << "\n"
       << "fig, ax = plt.subplots()\n"
       << "ax.semilogy(n, norm, marker='.')\n"
       << "ax.set_xlabel('n')\n"
       << "ax.set_ylabel('||z^n||')\n";
  } else if (header == "n,lebesgue_constant") {
    py << "n = " << py_list(column(0)) << "\n"
       << "L = " << py_list(column(1)) << "\n"
       << "import math\n"
       << "fig, ax = plt.subplots()\n"
       << "ax.set_xscale('log')\n"
       << "pos = [(a, b) for a, b in zip(n, L) if a >= 1]\n"
       << "ax.plot([a for a, _ in pos], [b for _, b in pos], 'o', label='L_n')\n"
       << "if len(pos) >= 2:\n"
       << "    xs = [math.log(a) for a, _ in pos]\n"
       << "    ys = [b for _, b in pos]\n"
       << "    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)\n"
       << "    sxx = sum((x - mx) ** 2 for x in xs)\n"
       << "    slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sxx if sxx else 0.0\n"
       << "    grid = sorted(a for a, _ in pos)\n"
       << "    ax.plot(grid, [my + slope * (math.log(a) - mx) for a in grid], '-',\n"
       << "            label='%.3f + %.3f ln n' % (my - slope * mx, slope))\n"
       << "ax.set_xlabel('n')\n"
       << "ax.set_ylabel('L_n')\n"
       << "ax.legend()\n";
  } else if (header == "input,n,error_norm,image_norm,lower_opnorm,upper_opnorm,tag") {
    std::map<std::string, std::vector<std::vector<std::string>>> series;
    std::vector<std::string> order;
    for (const auto& r : rows) {
      if (!series.count(r[0])) order.push_back(r[0]);
      series[r[0]].push_back(r);
    }
    py << "series = {}\n";
    for (const auto& name : order) {
      std::vector<std::string> n, e, im;
      for (const auto& r : series[name]) n.push_back(r[1]), e.push_back(r[2]), im.push_back(r[3]);
      py << "series['" << name << "'] = (" << py_list(n) << ", " << py_list(e) << ", "
         << py_list(im) << ", '" << series[name].front()[6] << "')\n";
    }
    py << "fig, (ax_e, ax_i) = plt.subplots(1, 2, figsize=(11, 4))\n"
       << "for name, (n, err, img, tag) in series.items():\n"
       << "    m = [k + 1 for k in n]\n"
       << "    ax_e.loglog(m, [max(v, 1e-300) for v in err], label=name)\n"
       << "    ax_i.semilogx(m, img, label='%s (%s)' % (name, tag))\n"
       << "ax_e.set_xlabel('n + 1')\n"
       << "ax_e.set_ylabel('||T_n f - f||')\n"
       << "ax_i.set_xlabel('n + 1')\n"
       << "ax_i.set_ylabel('||T_n f||')\n"
       << "if series:\n"
       << "    ax_e.legend()\n"
       << "    ax_i.legend()\n";
  } else {
    throw Error(ErrorKind::kConfigError, "csv: unrecognized header '" + header + "'");
  }
  py << "fig.tight_layout()\n"
     << "fig.savefig('" << png << "')\n";
  return py.str();
}

}  // namespace polyapprox::cli
