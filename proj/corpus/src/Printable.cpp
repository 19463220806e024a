#include <string>

class Printable {
public:
    virtual void print() = 0;

    virtual std::string label() { return "printable"; }
};
