#ifndef PFLAB_CSV_HPP
#define PFLAB_CSV_HPP

#include <fstream>
#include <string>
#include <vector>

namespace pflab {

// RFC-4180-style CSV with '.' decimal separator and 17 significant digits.
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);

    void header(const std::vector<std::string>& cols);
    void field(const std::string& s);
    void field(double v);
    void field(long long v);
    void field(int v) { field(static_cast<long long>(v)); }
    void end_row();

    static std::string format(double v);

private:
    std::ofstream os_;
    bool row_open_ = false;
};

} // namespace pflab

#endif
