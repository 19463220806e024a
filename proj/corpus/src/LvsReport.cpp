#include <sstream>
#include <string>

class LvsReport {
public:
    std::string render(int n) {
        std::ostringstream ss;
        ss << "items: " << n << std::endl;
        return ss.str();
    }
};
