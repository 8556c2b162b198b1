public class S046 extends State {
    public void open() {
        send("msg4");
    }

    public void close() {
        try {
            send("msg1");
            log("trace");
            new S091();
        } catch (IOException e) {
            send("msg0");
            update();
        }
        switch (event) {
            case EV5:
                log("trace");
                break;
            case EV3:
                update();
                try {
                    new S029();
                    update();
                    send("msg4");
                } catch (TimeoutException e) {
                    send("msg6");
                    new S015();
                    send("msg3");
                }
                break;
            case EV2:
                send("msg1");
                break;
        }
    }

    public void start() {
        send("msg5");
        log("trace");
    }

    public void stop() {
        new S016();
    }

    public void tick() {
        send("msg5");
        new S071();
    }

    public void reset() {
        switch (event) {
            case EV1:
                new Abstract0();
                try {
                    new Abstract4();
                } finally {
                    try {
                        update();
                        update();
                        log("trace");
                    } finally {
                        new S086();
                        send("msg3");
                    }
                    try {
                        send("msg5");
                        send("msg4");
                    } catch (TimeoutException e) {
                        new S037();
                    } catch (IOException e) {
                        new Abstract7();
                        log("trace");
                    } finally {
                        send("msg3");
                    }
                }
                break;
            case EV4:
                try {
                    switch (event) {
                        case EV2:
                            send("msg5");
                            update();
                            break;
                        case EV1:
                            new S023();
                            break;
                    }
                } finally {
                    switch (event) {
                        case EV3:
                            send("msg5");
                            update();
                            break;
                    }
                    send("msg1");
                    send("msg2");
                }
                break;
            case EV3:
                try {
                    if (counter > 8) {
                        new S028();
                        send("msg5");
                        update();
                    } else {
                        new S003();
                    }
                    try {
                        update();
                        new S051();
                        log("trace");
                    } finally {
                        new S055();
                        send("msg3");
                    }
                } catch (IOException e) {
                    new S097();
                    if (counter > 4) {
                        log("trace");
                        new S036();
                        new Abstract8();
                    } else {
                        new S082();
                        new S044();
                        send("msg3");
                    }
                }
                new S091();
                new S024();
                break;
        }
        send("msg5");
        send("msg2");
    }

    public void pause() {
        send("msg5");
    }

    public void resume() {
        send("msg0");
        send("msg3");
        if (counter > 2) {
            send("msg6");
        } else {
            try {
                try {
                    new Helper();
                } catch (IllegalStateException e) {
                    send("msg6");
                    new S089();
                    new S055();
                }
                switch (event) {
                    case EV2:
                        send("msg7");
                        break;
                    case EV4:
                        new S024();
                        break;
                    case EV1:
                        send("msg5");
                        send("msg4");
                        break;
                    default:
                        new S051();
                        log("trace");
                        send("msg6");
                        break;
                }
                new S038();
            } catch (IllegalStateException e) {
                update();
                new S055();
            }
            new S072();
            switch (event) {
                case EV5:
                    log("trace");
                    send("msg6");
                    break;
                case EV4:
                    switch (event) {
                        case EV1:
                            send("msg4");
                            break;
                    }
                    switch (event) {
                        case EV4:
                            send("msg0");
                            send("msg5");
                            break;
                        case EV1:
                            new S035();
                            send("msg7");
                            update();
                            break;
                    }
                    new S030();
                    break;
                case EV3:
                    log("trace");
                    send("msg0");
                    break;
                default:
                    send("msg7");
                    break;
            }
        }
    }

    public void load() {
        switch (event) {
            case EV5:
                if (counter > 8) {
                    switch (event) {
                        case EV1:
                            new S047();
                            new S019();
                            send("msg1");
                            break;
                        case EV3:
                            send("msg1");
                            send("msg2");
                            send("msg1");
                            break;
                        case EV0:
                            send("msg1");
                            send("msg0");
                            new S097();
                            break;
                    }
                } else {
                    new S074();
                }
                send("msg3");
                break;
            case EV4:
                try {
                    switch (event) {
                        case EV0:
                            update();
                            update();
                            break;
                        case EV4:
                            send("msg2");
                            break;
                        case EV2:
                            new S095();
                            send("msg1");
                            log("trace");
                            break;
                        default:
                            new S009();
                            new S029();
                            send("msg6");
                            break;
                    }
                    switch (event) {
                        case EV2:
                            send("msg5");
                            send("msg6");
                            send("msg4");
                            break;
                    }
                } catch (IOException e) {
                    send("msg6");
                } finally {
                    send("msg2");
                    send("msg1");
                    send("msg4");
                }
                send("msg4");
                if (counter > 2) {
                    update();
                }
                break;
        }
        new Abstract7();
        log("trace");
    }

    public void save() {
        send("msg7");
    }
}
