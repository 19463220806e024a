enum Color {RED = 0, BLACK, WHITE = 3};

class Palette {
public:
    Palette() : m_eColor(RED) {}

    int code(Color c) {
        int i = c;
        return i;
    }

    Color pick(int n) {
        Color col = RED;
        col = (Color) n;
        return col;
    }

    bool same(Color a, Color b) { return a == b; }

    bool isWhite() { return m_eColor == WHITE; }

    int next() { return m_eColor + 1; }

private:
    Color m_eColor;
};
