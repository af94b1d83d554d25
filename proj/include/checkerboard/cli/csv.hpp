#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

namespace checkerboard::cli {

// 12 significant digits, locale independent ("%.12g").
std::string format_number(double v);

class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header);

  // Fields are written in order; the row ends with end_row().
  CsvWriter& operator<<(double v);
  CsvWriter& operator<<(long long v);
  CsvWriter& operator<<(int v) { return *this << static_cast<long long>(v); }
  CsvWriter& operator<<(std::string_view s);
  void end_row();

 private:
  void separator();

  std::ostream& out_;
  std::size_t columns_;
  std::size_t field_ = 0;
};

}  // namespace checkerboard::cli
