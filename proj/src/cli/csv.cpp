#include "checkerboard/cli/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace checkerboard::cli {

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

CsvWriter::CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header)
    : out_(out), columns_(header.size()) {
  for (std::string_view h : header) *this << h;
  end_row();
}

void CsvWriter::separator() {
  if (field_ == columns_) throw std::logic_error("CSV row has too many fields");
  if (field_ > 0) out_ << ',';
  ++field_;
}

CsvWriter& CsvWriter::operator<<(double v) {
  separator();
  out_ << format_number(v);
  return *this;
}

CsvWriter& CsvWriter::operator<<(long long v) {
  separator();
  out_ << v;
  return *this;
}

CsvWriter& CsvWriter::operator<<(std::string_view s) {
  separator();
  out_ << s;
  return *this;
}

void CsvWriter::end_row() {
  if (field_ != columns_) throw std::logic_error("CSV row has too few fields");
  out_ << '\n';
  field_ = 0;
}

}  // namespace checkerboard::cli
