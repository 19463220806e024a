class BoolLogic {
public:
    bool a(bool b) { return b == true; }
    bool c(bool b) { return b != false; }
    bool d(bool b) { return false == b; }
    bool e(bool b, bool x) { return (b && true) || x; }
    bool f(bool b) { return b || false; }

    int count(int n) {
        int k = 0;
        if (n) {
            k = 1;
        }
        while (n) {
            n = n - 1;
            k = k + 1;
        }
        return k;
    }

    bool flag(int n) { return n; }

    int asInt(bool b) { return b; }
};
