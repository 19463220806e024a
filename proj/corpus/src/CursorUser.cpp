#include "Cursor.h"

class CursorUser {
public:
    int sum(std::string q) {
        Cursor c(q);
        int total = 0;
        while (c.next()) {
            total = total + c.value();
        }
        return total;
    }

    int pair(std::string q) {
        Cursor first(q);
        Cursor second("select 2");
        return first.value() + second.value();
    }
};
