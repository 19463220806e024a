package app;

public class Palette {
    public enum Color {
        RED(0), BLACK(1), WHITE(3);

        Color(int val) {
            m_Value = val;
        }

        public int asNum() {
            return m_Value;
        }

        public static Color forNum(int val) {
            switch (val) {
                case 0: return RED;
                case 1: return BLACK;
                case 3: return WHITE;
                default:
                    throw new RuntimeException("Invalid enum value");
            }
        }

        private int m_Value;
    }

    private Color m_eColor;

    public Palette() {
        m_eColor = Color.RED;
    }

    public int code(Color c) {
        int i = c.asNum();
        return i;
    }

    public Color pick(int n) {
        Color col = Color.RED;
        col = Color.forNum(n);
        return col;
    }

    public boolean same(Color a, Color b) {
        return a == b;
    }

    public boolean isWhite() {
        return m_eColor == Color.WHITE;
    }

    public int next() {
        return m_eColor.asNum() + 1;
    }
}
