#include "ucds/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "ucds/error.hpp"
#include "ucds/payload.hpp"

namespace ucds {

namespace fs = std::filesystem;

bool NaturalLess(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      std::string_view na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
  return a < b;
}

Dataset LoadDataset(const fs::path& root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw Error(ErrorCode::kIo, root.string() + " is not a directory");

  Dataset dataset;
  for (const auto& dir : fs::directory_iterator(root)) {
    if (!dir.is_directory()) continue;
    std::vector<std::pair<std::string, ExtractedChat>> files;
    for (const auto& file : fs::directory_iterator(dir.path())) {
      if (!file.is_regular_file() || file.path().extension() != ".json") continue;
      std::ifstream in(file.path(), std::ios::binary);
      if (!in) throw Error(ErrorCode::kIo, "cannot read " + file.path().string());
      std::ostringstream buf;
      buf << in.rdbuf();
      try {
        files.emplace_back(file.path().filename().string(), ParsePayload(buf.str()));
      } catch (const Error& e) {
        throw Error(e.code(), file.path().string() + ": " + e.what());
      }
    }
    if (files.empty()) continue;
    std::sort(files.begin(), files.end(), [](const auto& x, const auto& y) {
      if (x.second.chat_label != y.second.chat_label) {
        if (x.second.chat_label.size() != y.second.chat_label.size()) {
          return x.second.chat_label.size() < y.second.chat_label.size();
        }
        return x.second.chat_label < y.second.chat_label;
      }
      return x.first < y.first;
    });
    Participant participant{dir.path().filename().string(), {}};
    for (auto& [name, chat] : files) participant.chats.push_back(std::move(chat));
    dataset.participants.push_back(std::move(participant));
  }
  std::sort(dataset.participants.begin(), dataset.participants.end(),
            [](const Participant& x, const Participant& y) { return NaturalLess(x.id, y.id); });
  return dataset;
}

}  // namespace ucds
