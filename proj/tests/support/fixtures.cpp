/*
 * Copyright 2026 The evprop Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fixtures.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "evprop/network_io.hpp"

namespace evprop::testing {

std::string network_path(const std::string& name) { return std::string(EVPROP_NETWORK_DIR) + "/" + name; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Network load_network(const std::string& name) { return parse_network(read_text(network_path(name + ".json"))); }

Hypergraph example1_hypergraph() { return Hypergraph({{"a"}, {"b"}, {"c"}, {"a", "b"}, {"b", "c"}}); }

Hypergraph example2_hypergraph() {
  return Hypergraph({{"s"}, {"t"}, {"p"}, {"q"}, {"r"}, {"s", "p"}, {"p", "t"}, {"t", "q"}, {"s", "q"}, {"p", "r"}});
}

MarkovTree example1_tree() {
  std::vector<TreeNode> nodes;
  const auto h = example1_hypergraph();
  for (const auto& e : h.edges()) nodes.push_back({e, false});
  // {a}=0 {b}=1 {c}=2 {a,b}=3 {b,c}=4
  return MarkovTree(std::move(nodes), {{0, 3}, {1, 3}, {3, 4}, {2, 4}});
}

MarkovTree example2_tree() {
  std::vector<TreeNode> nodes;
  const auto h = example2_hypergraph();
  for (const auto& e : h.edges()) nodes.push_back({e, false});
  nodes.push_back({{"p", "q", "t"}, true});
  nodes.push_back({{"s", "p", "q"}, true});
  // {s}=0 {t}=1 {p}=2 {q}=3 {r}=4 {s,p}=5 {p,t}=6 {t,q}=7 {s,q}=8 {p,r}=9 {p,q,t}=10 {s,p,q}=11
  return MarkovTree(std::move(nodes),
                    {{10, 11}, {10, 6}, {10, 7}, {11, 5}, {11, 8}, {6, 9}, {1, 7}, {0, 5}, {2, 9}, {3, 8}, {4, 9}});
}

int run_tool(const std::string& args, std::string& output) {
  const std::string command = std::string("\"") + EVPROP_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + command);
  output.clear();
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
  const int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace evprop::testing
