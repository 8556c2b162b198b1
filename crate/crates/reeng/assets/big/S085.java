public class S085 extends Abstract18 {
    public void open() {
        send("msg2");
        send("msg6");
    }

    public void close() {
        new Abstract11();
    }

    public void start() {
        try {
            switch (event) {
                case EV3:
                    send("msg1");
                    new S089();
                    try {
                        new S078();
                        send("msg7");
                        update();
                    } finally {
                        send("msg5");
                        log("trace");
                    }
                    break;
                case EV1:
                    send("msg7");
                    send("msg1");
                    update();
                    break;
            }
            send("msg7");
            log("trace");
        } finally {
            new S010();
        }
    }

    public void stop() {
        send("msg1");
        send("msg2");
        update();
    }

    public void tick() {
        log("trace");
        new S099();
        send("msg5");
    }

    public void reset() {
        send("msg1");
        switch (event) {
            case EV1:
                new Abstract8();
                break;
            default:
                if (counter > 8) {
                    send("msg6");
                    send("msg2");
                } else {
                    if (counter > 3) {
                        send("msg3");
                        send("msg0");
                        send("msg3");
                    }
                    new S069();
                    try {
                        new S039();
                    } finally {
                        send("msg4");
                        log("trace");
                        new S004();
                    }
                }
                update();
                try {
                    switch (event) {
                        case EV2:
                            new S059();
                            break;
                        case EV1:
                            update();
                            break;
                        case EV4:
                            new Abstract2();
                            break;
                        default:
                            update();
                            break;
                    }
                    try {
                        send("msg4");
                    } finally {
                        send("msg2");
                        new S037();
                    }
                    try {
                        update();
                        update();
                        update();
                    } catch (TimeoutException e) {
                        send("msg2");
                        new S013();
                    } catch (IllegalStateException e) {
                        send("msg7");
                        new S096();
                        new S088();
                    }
                } catch (IOException e) {
                    if (counter > 9) {
                        send("msg4");
                        send("msg3");
                        send("msg5");
                    } else {
                        new S009();
                        new S030();
                        log("trace");
                    }
                }
                break;
        }
        send("msg1");
    }

    public void pause() {
        new S096();
        new S098();
        new S035();
    }

    public void resume() {
        if (counter > 4) {
            update();
            send("msg3");
        } else {
            try {
                switch (event) {
                    case EV0:
                        send("msg3");
                        send("msg7");
                        break;
                }
            } finally {
                new S030();
            }
            new S068();
            new S083();
        }
        switch (event) {
            case EV5:
                switch (event) {
                    case EV1:
                        log("trace");
                        break;
                }
                log("trace");
                send("msg7");
                break;
        }
    }

    public void load() {
        if (counter > 2) {
            send("msg0");
        } else {
            if (counter > 9) {
                new S010();
                new S014();
                new S047();
            }
            new S078();
            send("msg3");
        }
        update();
        new S042();
    }

    public void save() {
        send("msg4");
    }
}
