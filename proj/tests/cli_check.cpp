// Integration checks for the hhkit binary: runs a handful of commands end
// to end and validates exit codes, file output, and the JSON report shape.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
  if (!ok) ++failures;
}

int run(const std::string& cmd) { return std::system((cmd + " > /dev/null 2>&1").c_str()); }

std::string slurp(const std::string& path) {
  std::ifstream is(path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_check <path-to-hhkit>\n";
    return 2;
  }
  std::string bin = argv[1];
  std::string dir = "cli_check_tmp";
  std::remove((dir + "/h52.txt").c_str());
  run("mkdir -p " + dir);

  check(run(bin + " gen hh 5 2 --out " + dir + "/h52.txt") == 0, "gen hh 5 2 exits 0");
  {
    std::ifstream is(dir + "/h52.txt");
    std::string line;
    std::getline(is, line);
    check(line == "p 30 60", "edge file header is 'p 30 60'");
    long long edge_lines = 0;
    while (std::getline(is, line))
      if (line.rfind("e ", 0) == 0) ++edge_lines;
    check(edge_lines == 60, "edge file has 60 edge lines");
    std::ifstream ls(dir + "/h52.txt.labels");
    std::getline(ls, line);
    check(line == "1,3;1,2", "labels file first row");
  }

  check(run(bin + " gen kneser 5 2 --out " + dir + "/k52.txt") == 0, "gen kneser 5 2");
  check(slurp(dir + "/k52.txt").rfind("p 10 15", 0) == 0, "Petersen header 'p 10 15'");
  check(run(bin + " gen hh 3 3 --out " + dir + "/h33.txt") != 0,
        "gen hh 3 3 fails (empty vertex set)");

  check(run(bin + " gen hh 4 2 --format json --out " + dir + "/h42.json") == 0,
        "gen json format");
  {
    auto j = nlohmann::json::parse(slurp(dir + "/h42.json"));
    check(j["vertex_count"] == 12 && j["edge_count"] == 12, "json counts for H(4:2)");
    check(j["edges"].size() == 12 && j["labels"].size() == 12, "json payload sizes");
  }

  check(run(bin + " params 7 3 --out " + dir + "/params.json") == 0, "params 7 3");
  {
    auto j = nlohmann::json::parse(slurp(dir + "/params.json"));
    check(j["pass"] == true && j["exact"] == true, "params report pass+exact");
    bool saw_diameter = false;
    for (const auto& row : j["results"])
      if (row["name"] == "diameter")
        saw_diameter = row["formula"] == 5 && row["computed"] == 5 && row["match"] == true;
    check(saw_diameter, "params diameter row (5,5,true)");
    check(j.contains("elapsed_ms"), "report carries elapsed_ms");
  }
  check(run(bin + " params 6 2") == 0, "params 6 2");

  check(run(bin + " verify quotient --n-max 8") == 0, "verify quotient --n-max 8");
  check(run(bin + " verify subgraphs") == 0, "verify subgraphs");
  check(run(bin + " verify aut --instances 5:2,6:2 --out " + dir + "/aut.json") == 0,
        "verify aut 5:2,6:2");
  {
    auto j = nlohmann::json::parse(slurp(dir + "/aut.json"));
    std::vector<long long> orders;
    for (const auto& row : j["results"])
      if (row.contains("order")) orders.push_back(row["order"].get<long long>());
    check(orders == std::vector<long long>{120, 720}, "aut orders 120, 720");
  }
  check(run(bin + " verify frachom --instances 4:2,5:2") == 0, "verify frachom");
  check(run(bin + " verify nonsense") != 0, "unknown suite rejected");

  check(run(bin + " table 2 --out " + dir + "/t2.json") == 0, "table 2");
  {
    auto j = nlohmann::json::parse(slurp(dir + "/t2.json"));
    check(j["results"].size() == 6 && j["pass"] == true, "table 2: 6 rows, all match");
  }

  std::cout << (failures == 0 ? "ALL OK\n" : "FAILURES\n");
  return failures == 0 ? 0 : 1;
}
