package Drawing.Shapes.coreElements;

import java.awt.Graphics;

public class MyOval {

    public MyOval() {
    }

    public void draw(Graphics g) {
        g.drawOval(0, 0, 10, 10);
    }
}
