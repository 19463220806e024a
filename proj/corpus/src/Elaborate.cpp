#include "Base.h"

class Elaborate : public Base {
public:
    int weigh() { return getDAOMember() * 2 + helper(); }

    void reset() { this->setDAOMember(0); }
};
