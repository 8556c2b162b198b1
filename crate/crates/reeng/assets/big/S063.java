public class S063 extends Abstract9 {
    public void open() {
        if (counter > 1) {
            send("msg6");
            if (counter > 1) {
                send("msg0");
                log("trace");
                new S017();
            } else {
                if (counter > 6) {
                    send("msg1");
                } else {
                    send("msg7");
                    new S060();
                }
                new S052();
                send("msg1");
            }
        }
        update();
    }

    public void close() {
        if (counter > 0) {
            try {
                send("msg2");
                new S096();
            } catch (IOException e) {
                try {
                    send("msg3");
                    send("msg0");
                    update();
                } finally {
                    send("msg5");
                }
                switch (event) {
                    case EV4:
                        send("msg0");
                        break;
                }
                send("msg6");
            }
        }
        new S082();
    }

    public void start() {
        new S041();
        try {
            switch (event) {
                case EV2:
                    new S044();
                    if (counter > 7) {
                        new Abstract16();
                    }
                    break;
                case EV0:
                    try {
                        update();
                    } catch (IOException e) {
                        new S050();
                        new S029();
                        new S077();
                    }
                    new S078();
                    break;
                case EV1:
                    if (counter > 1) {
                        new S062();
                        new S090();
                        new S003();
                    }
                    break;
            }
        } finally {
            switch (event) {
                case EV2:
                    switch (event) {
                        case EV2:
                            send("msg5");
                            new S013();
                            new Abstract23();
                            break;
                        case EV3:
                            new S015();
                            break;
                        case EV0:
                            send("msg3");
                            new S009();
                            new S075();
                            break;
                    }
                    log("trace");
                    if (counter > 4) {
                        new S022();
                        send("msg6");
                    }
                    break;
                case EV5:
                    try {
                        send("msg4");
                    } finally {
                        log("trace");
                    }
                    break;
                case EV3:
                    send("msg3");
                    send("msg1");
                    send("msg6");
                    break;
            }
            update();
        }
        new S012();
    }

    public void stop() {
        send("msg6");
        new S071();
    }

    public void tick() {
        new S051();
    }

    public void reset() {
        send("msg2");
        send("msg1");
        switch (event) {
            case EV1:
                try {
                    send("msg5");
                    send("msg6");
                } finally {
                    log("trace");
                }
                if (counter > 9) {
                    send("msg1");
                    if (counter > 5) {
                        new S093();
                        new S028();
                    } else {
                        new S062();
                        log("trace");
                    }
                    switch (event) {
                        case EV3:
                            update();
                            update();
                            break;
                        case EV1:
                            log("trace");
                            send("msg0");
                            new S073();
                            break;
                        case EV4:
                            send("msg1");
                            break;
                    }
                } else {
                    try {
                        new S056();
                        new S047();
                    } finally {
                        send("msg0");
                        update();
                    }
                    if (counter > 4) {
                        send("msg7");
                    } else {
                        send("msg0");
                        send("msg4");
                    }
                    send("msg2");
                }
                log("trace");
                break;
            case EV0:
                send("msg1");
                try {
                    switch (event) {
                        case EV0:
                            new S053();
                            send("msg0");
                            break;
                        case EV1:
                            new S092();
                            break;
                        case EV5:
                            send("msg2");
                            new S034();
                            break;
                    }
                } finally {
                    switch (event) {
                        case EV4:
                            new S058();
                            new S066();
                            break;
                        case EV5:
                            new S061();
                            send("msg7");
                            break;
                        case EV2:
                            send("msg5");
                            new S043();
                            break;
                        default:
                            update();
                            log("trace");
                            send("msg3");
                            break;
                    }
                    new S070();
                    new S039();
                }
                new S069();
                break;
        }
    }

    public void pause() {
        switch (event) {
            case EV0:
                if (counter > 2) {
                    send("msg6");
                    if (counter > 9) {
                        send("msg7");
                        send("msg1");
                        new S023();
                    } else {
                        new S016();
                        send("msg7");
                        update();
                    }
                    send("msg2");
                } else {
                    new S000();
                    send("msg1");
                    send("msg7");
                }
                send("msg6");
                break;
            case EV1:
                send("msg4");
                new S050();
                break;
            case EV2:
                send("msg6");
                break;
        }
    }

    public void resume() {
        try {
            switch (event) {
                case EV3:
                    try {
                        update();
                        send("msg0");
                    } catch (TimeoutException e) {
                        log("trace");
                        new S000();
                    } catch (IOException e) {
                        send("msg0");
                        log("trace");
                    } finally {
                        new Abstract21();
                    }
                    break;
                default:
                    new S074();
                    try {
                        send("msg0");
                    } catch (TimeoutException e) {
                        new S004();
                    } catch (IllegalStateException e) {
                        new S072();
                        new Abstract12();
                    }
                    break;
            }
            send("msg0");
        } catch (TimeoutException e) {
            new S026();
            new S092();
        } finally {
            new S087();
        }
    }

    public void load() {
        try {
            switch (event) {
                case EV5:
                    send("msg4");
                    switch (event) {
                        case EV2:
                            send("msg5");
                            new S070();
                            break;
                        case EV5:
                            new Abstract24();
                            new S086();
                            send("msg5");
                            break;
                        default:
                            new S074();
                            log("trace");
                            update();
                            break;
                    }
                    try {
                        send("msg7");
                        log("trace");
                    } catch (IOException e) {
                        log("trace");
                        new S074();
                    } finally {
                        send("msg2");
                    }
                    break;
            }
            send("msg4");
            update();
        } finally {
            update();
        }
    }

    public void save() {
        update();
        try {
            new Abstract9();
            new S050();
        } catch (IOException e) {
            if (counter > 9) {
                update();
                if (counter > 7) {
                    new S028();
                }
                switch (event) {
                    case EV1:
                        new S078();
                        send("msg3");
                        break;
                    case EV5:
                        log("trace");
                        new S002();
                        new Abstract2();
                        break;
                }
            } else {
                send("msg6");
            }
            switch (event) {
                case EV2:
                    send("msg1");
                    send("msg3");
                    log("trace");
                    break;
                case EV4:
                    new S031();
                    send("msg2");
                    break;
                case EV1:
                    update();
                    break;
            }
            send("msg2");
        }
        send("msg6");
    }
}
