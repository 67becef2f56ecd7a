#include <gw/memo.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace gw {

std::string memo_key(int d, int n, std::vector<int> codims) {
  std::sort(codims.begin(), codims.end());
  std::string key = std::to_string(d) + ":" + std::to_string(n) + ":";
  for (std::size_t i = 0; i < codims.size(); ++i) {
    if (i) key += ',';
    key += std::to_string(codims[i]);
  }
  return key;
}

MemoTable& global_memo() {
  static MemoTable table;
  return table;
}

bool load_cache_file(const std::string& path, MemoTable& memo) {
  std::ifstream in(path);
  if (!in) return false;
  std::string header;
  std::getline(in, header);
  if (header != kCacheHeader) {
    std::cerr << "warning: ignoring cache file " << path
              << " (unrecognized version header)\n";
    return false;
  }
  std::map<std::string, CountValue> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto sep = line.find(' ');
    if (sep == std::string::npos) continue;
    entries.emplace(line.substr(0, sep), CountValue(line.substr(sep + 1)));
  }
  memo.merge(entries);
  return true;
}

bool save_cache_file(const std::string& path, const MemoTable& memo) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return false;
    out << kCacheHeader << '\n';
    for (const auto& [k, v] : memo.snapshot()) out << k << ' ' << v.get_str() << '\n';
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  return !ec;
}

}  // namespace gw
