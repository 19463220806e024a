#include <stdexcept>
#include <string>

class LvsCheck {
public:
    void require(int n) {
        if (n < 0) {
            throw std::runtime_error("negative");
        }
    }

    int guarded(int n) {
        try {
            require(n);
        } catch (std::runtime_error& e) {
            return -1;
        }
        return n;
    }

    std::string message(int n) {
        try {
            require(n);
        } catch (const std::exception& e) {
            return e.what();
        } catch (...) {
            throw;
        }
        return "";
    }
};
